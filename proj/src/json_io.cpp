#include "skewforms/json_io.hpp"

#include <fstream>
#include <set>

namespace skewforms {

namespace {

int index_field(const Json& t, const char* key) {
  if (!t.contains(key) || !t[key].is_number_integer()) throw JsonFormatError(std::string("term needs integer '") + key + "'");
  long v = t[key].get<long>();
  if (v < 1 || v > static_cast<long>(kDim)) throw JsonFormatError("index out of range 1..6");
  return static_cast<int>(v);
}

Rational coefficient_field(const Json& t) {
  if (!t.contains("c")) throw JsonFormatError("term needs 'c'");
  const Json& c = t["c"];
  try {
    if (c.is_string()) return Rational::parse(c.get<std::string>());
    if (c.is_number_integer()) return Rational(c.get<long>());
  } catch (const std::logic_error& e) {
    throw JsonFormatError(std::string("bad coefficient: ") + e.what());
  }
  throw JsonFormatError("coefficient must be a rational string or an integer");
}

Json vector_to_json(const QVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

}  // namespace

Json form_to_json(const AlternatingForm& w) {
  Json terms = Json::array();
  for (std::size_t k = 0; k < kPairs; ++k) {
    if (w[k].is_zero()) continue;
    auto [i, j] = pair_at(k);
    terms.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"c", w[k].str()}});
  }
  return Json{{"terms", terms}};
}

AlternatingForm form_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw JsonFormatError("form must be an object with a 'terms' array");
  AlternatingForm w;
  std::set<std::size_t> seen;
  for (const auto& t : j["terms"]) {
    if (!t.is_object()) throw JsonFormatError("term must be an object");
    int i = index_field(t, "i"), jj = index_field(t, "j");
    if (i >= jj) throw JsonFormatError("term indices must satisfy i < j");
    std::size_t k = pair_index(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jj - 1));
    if (!seen.insert(k).second) throw JsonFormatError("repeated pair in terms");
    w[k] = coefficient_field(t);
  }
  return w;
}

Json system_to_json(const LinearSystem& a) {
  Json gens = Json::array();
  for (const auto& g : a.generators()) gens.push_back(form_to_json(g));
  return Json{{"generators", gens}};
}

LinearSystem system_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
    throw JsonFormatError("system must be an object with a 'generators' array");
  std::vector<AlternatingForm> gens;
  for (const auto& g : j["generators"]) gens.push_back(form_from_json(g));
  return LinearSystem(std::move(gens));
}

Json matrix_to_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

Json subspace_to_json(const Subspace& s) {
  Json out = Json::array();
  for (const auto& v : s.basis()) out.push_back(vector_to_json(v));
  return out;
}

Json witness_to_json(const DestabilizingWitness& w) {
  return Json{{"s", w.s},
              {"severity", to_string(w.severity)},
              {"U", subspace_to_json(w.u)},
              {"U_prime", subspace_to_json(w.u_prime)}};
}

Json verdict_to_json(const StabilityVerdict& v) {
  Json out{{"tag", to_string(v.tag)}};
  if (v.witness) out["witness"] = witness_to_json(*v.witness);
  out["exact_path"] = v.exact_path;
  out["semistability_certified"] = v.semistability_certified;
  out["primes_searched"] = v.primes_searched;
  out["evidence"] = v.evidence;
  return out;
}

Json cdf_to_json(const CDFDatum& d) {
  return Json{{"C", subspace_to_json(d.c)}, {"D", subspace_to_json(d.d)}, {"f", matrix_to_json(d.f)}};
}

Json gr_report_to_json(const GrIntersectionReport& r) {
  Json counts = Json::array();
  for (const auto& [p, n] : r.counts) counts.push_back(Json{{"p", p}, {"count", n}});
  Json samples = Json::array();
  for (const auto& s : r.samples) samples.push_back(form_to_json(s));
  return Json{{"type", r.type}, {"counts", counts}, {"samples", samples}};
}

Json theorem_report_to_json(const TheoremReport& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims) claims.push_back(Json{{"claim", c.claim}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"theorem", r.name}, {"pass", r.pass()}, {"claims", claims}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonFormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw JsonFormatError(path + ": " + e.what());
  }
}

}  // namespace skewforms
