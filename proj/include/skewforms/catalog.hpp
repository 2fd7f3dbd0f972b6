#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewforms/linsys.hpp"
#include "skewforms/stability.hpp"

namespace skewforms {

class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SignatureMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedSystem {
  std::string name;
  LinearSystem system;
  std::string expected_verdict;       ///< StabilityTag name, or "" when not asserted
  std::string expected_intersection;  ///< count signature type, or ""
  std::string description;
};

std::vector<std::string> builtin_names();
/// Throws UnknownName.
NamedSystem builtin(const std::string& name);

/// One entry of a 6x6 skew matrix of linear forms in X_0..X_4, stored above
/// the diagonal (1-based indices as printed).
struct BetaEntry {
  int i, j, var, sign;
};
using BetaMatrix = std::vector<BetaEntry>;

/// "beta_conic" or "beta_lines"; throws UnknownName.
BetaMatrix beta_matrix(const std::string& name);
/// The coefficient matrices of X_0..X_4 as generators.
LinearSystem beta_system(const BetaMatrix& beta);

struct BetaRankReport {
  bool pfaffian_vanishes = false;
  int special_points = 0;       ///< points on the rank-2 locus tested
  int special_rank2 = 0;        ///< of which rank exactly 2
  int generic_points = 0;       ///< points off the locus tested
  int generic_rank4 = 0;        ///< of which rank exactly 4
};

enum class BetaKind { conic, lines };

/// Ranks along the expected rank-2 locus (conic (s^2, st, t^2, 0, 0), or the
/// lines X0=X1=X2=0 and X2=X3=X4=0) and at random points off it.
BetaRankReport beta_rank_locus(const LinearSystem& beta, BetaKind kind, std::uint64_t seed, int special_per_component,
                               int generic);

enum class BetaOrbit { conic_type, two_lines_type };
std::string to_string(BetaOrbit o);
/// From the rank-2 count signature; throws SignatureMismatch otherwise.
BetaOrbit beta_orbit(const LinearSystem& beta, const std::vector<std::uint32_t>& primes = {5, 7, 11},
                     unsigned jobs = 1);

/// Random system with the given zero pattern (nonstable when unstable is
/// false): m_ij = 0 for i <= s, i < j <= 6 - s (or 7 - s), 1-based, and
/// other coefficients drawn from [-5, 5]. Redraws until independent.
LinearSystem random_pattern_system(int s, bool unstable, std::size_t generators, std::mt19937_64& rng);
/// Random integral element of determinant 1 built from elementary row
/// operations and a signed permutation, so it is invertible mod every prime.
GroupElement random_conjugator(std::mt19937_64& rng, int steps = 14);

/// The explicit weights refuting semistability (unstable) or stability.
OnePS pattern_weights(int s, bool unstable);

struct ClaimResult {
  std::string claim;
  bool pass = false;
  std::string detail;
};

struct TheoremReport {
  std::string name;
  std::vector<ClaimResult> claims;
  bool pass() const;
};

struct VerifyOptions {
  std::vector<std::uint32_t> primes{5, 7, 11};
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  int pattern_samples = 100;
};

/// dim3, dim4a, dim4b, dim5, planes, planes_not_stable, unstable_in_pf,
/// appendix.
std::vector<std::string> theorem_names();
/// Throws UnknownName.
TheoremReport verify_theorem(const std::string& name, const VerifyOptions& opts = {});

}  // namespace skewforms
