#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewforms/exterior.hpp"
#include "skewforms/linsys.hpp"

namespace skewforms {

class NotCR4 : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotGeneralType : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CR4Evidence {
  bool constant_rank4 = false;
  bool pfaffian_vanishes = false;
  /// Members of rank at most 2 found over each prime.
  std::map<std::uint32_t, std::uint64_t> rank2_counts;
  /// A member of rank 2 or 6 when the answer is false and one was lifted.
  std::optional<AlternatingForm> counterexample;
  std::string note;
};

/// Pfaffian cubic identically zero and no rank-2 point over F_p for the given
/// primes. Throws std::invalid_argument unless B has three generators.
CR4Evidence is_constant_rank4(const LinearSystem& b, const std::vector<std::uint32_t>& primes = {5, 7, 11},
                              unsigned jobs = 1);

enum class OrbitLabel { general, tangent, pencil, hyperplane, not_cr4, unrecognized };
std::string to_string(OrbitLabel l);

/// Isomorphism f from C to D with B = {x^f(y) - y^f(x)}. Column j of f holds
/// the coordinates of f(c_j) in the basis d.
struct CDFDatum {
  Subspace c;
  Subspace d;
  QMatrix f;
  /// f(x) for x in C.
  QVec apply(const QVec& x) const;
};

/// x^f(y) - y^f(x).
AlternatingForm cdf_form(const CDFDatum& datum, const QVec& x, const QVec& y);

/// Recovers C, D and f from the two isotropic 3-spaces of a general-type
/// plane. Throws NotGeneralType when B is not of that type and
/// IrrationalSolutions when the isotropic 3-spaces are not rational.
CDFDatum recover_cdf(const LinearSystem& b);

/// g of determinant 1 with g.B equal to the normal form plane.
GroupElement normalize_general_plane(const LinearSystem& b);

/// Throws NotCR4 when B is not a constant-rank-4 plane.
OrbitLabel classify_cr4_plane(const LinearSystem& b, const std::vector<std::uint32_t>& primes = {5, 7, 11},
                              unsigned jobs = 1);

/// Generators of the four normal form planes.
std::vector<AlternatingForm> normal_form_plane(OrbitLabel label);

/// The standard isomorphism e1 -> e5, e2 -> -e4, e3 -> -e6.
CDFDatum standard_cdf();

}  // namespace skewforms
