#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "skewforms/exterior.hpp"

namespace skewforms {

/// The solution set has a positive-dimensional component.
class PositiveDimensional : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Some solution has coordinates outside the rationals.
class IrrationalSolutions : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two basis vectors of W for each of three lines of W.
using LineTriple = std::array<std::array<QVec, 2>, 3>;

/// All points ([k0], [k1], [k2]) of P(K0) x P(K1) x P(K2) with
/// w(k_a, k_b) = 0 for every given form and every pair a < b. Each k_a is
/// returned as a vector of W. The set is finite or an exception is thrown.
std::vector<std::array<QVec, 3>> solve_isotropic_triples(const LineTriple& lines,
                                                         const std::vector<AlternatingForm>& forms);

/// Canonical ordering of subspaces: by pivot columns, then entries.
bool subspace_less(const Subspace& a, const Subspace& b);

}  // namespace skewforms
