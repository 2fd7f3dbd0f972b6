#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "skewforms/exterior.hpp"

namespace skewforms {

/// Raw mod-p arithmetic for the enumeration hot loops. Values are kept in
/// [0, p) and p stays far below 2^16, so products fit in 32 bits.
struct ModArith {
  std::uint32_t p;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { std::uint32_t s = a + b; return s >= p ? s - p : s; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (a * b) % p; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t inv(std::uint32_t a) const;
};

using FpForm = std::array<std::uint32_t, kPairs>;
using FpVec = std::array<std::uint32_t, kDim>;

/// Generators of a system reduced mod p. Throws BadPrime when p divides a
/// denominator or is not a usable prime (odd, below 2^16).
struct FpSystem {
  ModArith f;
  std::vector<FpForm> gens;
};
FpSystem reduce_forms(const std::vector<AlternatingForm>& gens, std::uint32_t p);

std::uint32_t fp_evaluate(const ModArith& f, const FpForm& w, const FpVec& u, const FpVec& v);
/// omega(u, .) as a covector.
FpVec fp_contract(const ModArith& f, const FpForm& w, const FpVec& u);
/// True iff w^w = 0 mod p, i.e. rank at most 2.
bool fp_rank_at_most_2(const ModArith& f, const FpForm& w);
std::size_t fp_rank(const ModArith& f, std::vector<std::vector<std::uint32_t>> rows);

/// Number of points of P^{n-1}(F_p).
std::uint64_t projective_count(std::size_t n, std::uint32_t p);
/// Point with the given index: first nonzero coordinate is 1, points are
/// ordered by that coordinate's position, then lexicographically.
void projective_point(std::uint64_t index, std::size_t n, std::uint32_t p, std::vector<std::uint32_t>& out);
/// Scales a nonzero vector so its first nonzero entry is 1.
void normalize_projective(const ModArith& f, std::vector<std::uint32_t>& v);

/// k-subsets of {0..5} in colex order.
std::vector<std::vector<int>> pivot_sets_colex(std::size_t k);

/// Rows of an echelon representative; entries in [0, p).
using EchelonRows = std::vector<FpVec>;

/// Solution set of a linear system given as augmented rows [A | b].
struct AffineSpace {
  bool empty = false;
  std::vector<std::uint32_t> particular;
  std::vector<std::vector<std::uint32_t>> directions;
};
AffineSpace solve_affine(const ModArith& f, std::vector<std::vector<std::uint32_t>> augmented, std::size_t nvars);

/// Depth-first enumeration of reduced-echelon representatives with the given
/// pivots. For each row r, constraints(rows, r, out) lists covectors the row
/// must annihilate; the row's free entries then range over the solution space
/// of those linear equations only. row_ok(rows, r) can prune further and
/// on_full(rows) returns true to stop. Returns true if stopped.
template <class Constraints, class RowOk, class OnFull>
bool enumerate_echelon(const ModArith& f, const std::vector<int>& pivots, Constraints&& constraints, RowOk&& row_ok,
                       OnFull&& on_full) {
  const std::size_t k = pivots.size();
  EchelonRows rows(k);
  std::vector<std::vector<int>> free_cols(k);
  for (std::size_t r = 0; r < k; ++r) {
    rows[r].fill(0);
    rows[r][pivots[r]] = 1;
    for (int c = pivots[r] + 1; c < static_cast<int>(kDim); ++c) {
      bool is_pivot = false;
      for (int q : pivots) is_pivot = is_pivot || q == c;
      if (!is_pivot) free_cols[r].push_back(c);
    }
  }
  std::vector<FpVec> cov;
  auto rec = [&](auto&& self, std::size_t r) -> bool {
    if (r == k) return on_full(static_cast<const EchelonRows&>(rows));
    const auto& fc = free_cols[r];
    cov.clear();
    constraints(static_cast<const EchelonRows&>(rows), r, cov);
    std::vector<std::vector<std::uint32_t>> aug;
    for (const auto& c : cov) {
      std::vector<std::uint32_t> eq(fc.size() + 1);
      for (std::size_t i = 0; i < fc.size(); ++i) eq[i] = c[fc[i]];
      eq[fc.size()] = f.neg(c[pivots[r]]);
      aug.push_back(std::move(eq));
    }
    AffineSpace sol = solve_affine(f, std::move(aug), fc.size());
    if (sol.empty) return false;
    const std::size_t d = sol.directions.size();
    std::vector<std::uint32_t> t(d, 0);
    while (true) {
      for (std::size_t i = 0; i < fc.size(); ++i) {
        std::uint32_t v = sol.particular[i];
        for (std::size_t j = 0; j < d; ++j)
          if (t[j]) v = f.add(v, f.mul(t[j], sol.directions[j][i]));
        rows[r][fc[i]] = v;
      }
      if (row_ok(static_cast<const EchelonRows&>(rows), r) && self(self, r + 1)) return true;
      std::size_t i = d;
      while (i > 0) {
        --i;
        if (++t[i] < f.p) break;
        t[i] = 0;
        if (i == 0) return false;
      }
      if (d == 0) return false;
    }
  };
  return rec(rec, 0);
}

/// Exact lift of mod-p vectors by half-modulus rational reconstruction.
std::optional<std::vector<QVec>> lift_rows(const std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p);
std::optional<std::vector<QVec>> lift_rows(const EchelonRows& rows, std::uint32_t p);

}  // namespace skewforms
