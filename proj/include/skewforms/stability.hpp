#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewforms/exterior.hpp"
#include "skewforms/linsys.hpp"

namespace skewforms {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer weights l_1 >= ... >= l_6 summing to zero, not all zero.
class OnePS {
 public:
  /// Throws std::invalid_argument when the weights violate the invariants.
  explicit OnePS(std::array<int, kDim> weights);
  const std::array<int, kDim>& weights() const { return w_; }

 private:
  std::array<int, kDim> w_;
};

enum class LimitClass { diverges, bounded_nonzero_limit, limit_zero };
std::string to_string(LimitClass c);

/// Behaviour of diag(t^l) . A as t grows: each nonzero coefficient of
/// e_i^e_j is scaled by t^(l_i + l_j).
LimitClass one_ps_limit_class(const LinearSystem& a, const OnePS& lambda);

enum class PatternMatch { none, nonstable, unstable };
std::string to_string(PatternMatch m);

/// Tests the coefficient zero patterns of g.A: nonstable when m_ij = 0 for
/// i <= s, i < j <= 6 - s; unstable when the same holds up to 7 - s
/// (1-based). Returns the strongest match.
PatternMatch zero_pattern_check(const LinearSystem& a, const GroupElement& g, int s);

enum class Severity { nonstable, unstable };
std::string to_string(Severity s);

/// Subspaces U of dimension s inside U' of W with w(U, U') = 0 for every
/// generator.
struct DestabilizingWitness {
  int s = 0;
  Subspace u;
  Subspace u_prime;
  Severity severity = Severity::nonstable;
};

/// Exact check of the pairings, U inside U', and the dimension threshold of
/// the claimed severity.
bool verify_witness(const LinearSystem& a, const DestabilizingWitness& w);

/// {v : w(u, v) = 0 for all u in U and all generators}.
Subspace orthogonal_in_w(const LinearSystem& a, const Subspace& u);

/// Builds the strongest witness with the given U: U' is the full
/// orthogonal of U, and the severity follows its dimension. Nothing if U'
/// is too small or U is not contained in it.
std::optional<DestabilizingWitness> witness_from(const LinearSystem& a, int s, const Subspace& u);

DestabilizingWitness transport(const GroupElement& g, const DestabilizingWitness& w);

/// Result of a finite-field search: a witness that was lifted to the
/// rationals and re-verified exactly, or evidence that only mod-p hits were
/// seen.
struct SearchOutcome {
  std::optional<DestabilizingWitness> witness;
  std::uint64_t unlifted_hits = 0;
  std::uint32_t prime = 0;
};

/// Vectors u with dim span{w_k(u, .)} <= 1 (at most 0 when unstable_only).
SearchOutcome search_s1(const LinearSystem& a, std::uint32_t p, unsigned jobs = 1, bool unstable_only = false);
/// Totally isotropic subspaces of dimension dim_u (3 or 4).
SearchOutcome search_s3(const LinearSystem& a, std::uint32_t p, int dim_u, unsigned jobs = 1);
/// 2-planes U whose contractions span at most a line annihilated by U.
SearchOutcome search_s2_unstable(const LinearSystem& a, std::uint32_t p, unsigned jobs = 1);

/// Number of totally isotropic k-dimensional subspaces over F_p.
std::uint64_t count_isotropic(const LinearSystem& a, std::uint32_t p, int k, unsigned jobs = 1);

/// The three generators of the general-type normal form plane.
std::vector<AlternatingForm> pi_g_generators();
/// True if the first three generators equal the normal form exactly.
bool starts_with_pi_g(const LinearSystem& a);

/// All isotropic 3-spaces of A when its first three generators are the
/// normal form plane. Throws PreconditionError otherwise.
std::vector<Subspace> isotropic3_candidates_for_pi_g(const LinearSystem& a);

enum class StabilityTag { Stable, StrictlySemistable, Unstable, Unknown };
std::string to_string(StabilityTag t);

struct StabilityVerdict {
  StabilityTag tag = StabilityTag::Unknown;
  std::optional<DestabilizingWitness> witness;
  bool exact_path = false;
  bool semistability_certified = false;
  std::vector<std::uint32_t> primes_searched;
  std::vector<std::string> evidence;
};

struct StabilityOptions {
  std::vector<std::uint32_t> primes{5, 7, 11};
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  /// Require the first generators to be the normal form plane.
  bool assume_pi_g = false;
  /// Random planes tried when looking for a general-type plane inside A.
  int plane_attempts = 48;
};

/// Exact decision when A contains a general-type plane (found directly or
/// through normalization); otherwise zero patterns and finite-field
/// searches, returning Unknown when nothing destabilizes.
StabilityVerdict decide_stability(const LinearSystem& a, const StabilityOptions& opts = {});

/// Exact decision for a system whose first three generators are the normal
/// form plane.
StabilityVerdict decide_stability_exact(const LinearSystem& a);

}  // namespace skewforms
