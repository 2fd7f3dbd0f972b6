#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "skewforms/catalog.hpp"
#include "skewforms/exterior.hpp"
#include "skewforms/linsys.hpp"
#include "skewforms/planes.hpp"
#include "skewforms/stability.hpp"

namespace skewforms {

using Json = nlohmann::ordered_json;

class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"terms":[{"i":1,"j":4,"c":"1"}, ...]} with 1-based indices, i < j, and
/// coefficients as rational strings. Zero coefficients are omitted.
Json form_to_json(const AlternatingForm& w);
/// Throws JsonFormatError on bad indices, i >= j, repeated pairs, or
/// malformed coefficients.
AlternatingForm form_from_json(const Json& j);

/// {"generators":[<form>, ...]}.
Json system_to_json(const LinearSystem& a);
/// Throws JsonFormatError, or DependentGenerators for a dependent list.
LinearSystem system_from_json(const Json& j);

/// Rows of rational strings.
Json matrix_to_json(const QMatrix& m);
Json subspace_to_json(const Subspace& s);
Json witness_to_json(const DestabilizingWitness& w);
Json verdict_to_json(const StabilityVerdict& v);
Json cdf_to_json(const CDFDatum& d);
Json gr_report_to_json(const GrIntersectionReport& r);
Json theorem_report_to_json(const TheoremReport& r);

/// Reads and parses a file; throws JsonFormatError on I/O or parse errors.
Json read_json_file(const std::string& path);

}  // namespace skewforms
