#pragma once

// Shared generators and independent oracles for the test suites.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "skewforms/exterior.hpp"
#include "skewforms/linsys.hpp"

namespace testing_support {

using namespace skewforms;

/// e_i^e_j with 1-based indices, as written in formulas.
inline AlternatingForm e(int i, int j) { return AlternatingForm::basis(i - 1, j - 1); }

/// Unit vector u_i (1-based) of W, or e_i of the dual.
inline QVec unit(int i) {
  QVec v(kDim, Rational(0));
  v[i - 1] = 1;
  return v;
}

inline Subspace span_w(std::initializer_list<int> idx) {
  std::vector<QVec> rows;
  for (int i : idx) rows.push_back(unit(i));
  return Subspace::span(Subspace::Ambient::W, rows);
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Rational rational(int lo = -9, int hi = 9) {
    int den = integer(1, 5);
    return Rational(mpz_class(integer(lo, hi)), mpz_class(den));
  }
  Rational nonzero_rational() {
    Rational r;
    do r = rational(); while (r.is_zero());
    return r;
  }
  AlternatingForm form(int lo = -9, int hi = 9) {
    AlternatingForm w;
    for (std::size_t k = 0; k < kPairs; ++k) w[k] = integer(lo, hi);
    return w;
  }
  AlternatingForm rational_form() {
    AlternatingForm w;
    for (std::size_t k = 0; k < kPairs; ++k) w[k] = rational();
    return w;
  }
  /// A form of rank at most 2r built from r random decomposable pieces.
  AlternatingForm form_of_rank_at_most(int r) {
    AlternatingForm w;
    for (int i = 0; i < r; ++i) w += wedge(vec(), vec());
    return w;
  }
  QVec vec(int lo = -5, int hi = 5) {
    QVec v(kDim);
    for (auto& x : v) x = integer(lo, hi);
    return v;
  }
  /// Random product of elementary matrices: integral with determinant 1,
  /// so it stays invertible modulo every prime.
  GroupElement unimodular(int steps = 14) {
    QMatrix m = QMatrix::identity(kDim);
    for (int s = 0; s < steps; ++s) {
      std::size_t i = static_cast<std::size_t>(integer(0, 5)), j = static_cast<std::size_t>(integer(0, 5));
      if (i == j) continue;
      Rational c = integer(-2, 2);
      for (std::size_t k = 0; k < kDim; ++k) m(i, k) += c * m(j, k);
    }
    // Random signed permutation with even sign count keeps det = +-1.
    std::vector<std::size_t> perm(kDim);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng_);
    QMatrix p(kDim, kDim);
    for (std::size_t i = 0; i < kDim; ++i) p(i, perm[i]) = 1;
    return GroupElement(p * m);
  }
  /// Random rational invertible matrix.
  GroupElement invertible() {
    while (true) {
      QMatrix m(kDim, kDim);
      for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j) m(i, j) = integer(-3, 3);
      if (!determinant(m).is_zero()) return GroupElement(m);
    }
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Determinant by the Leibniz permutation sum, independent of elimination.
inline Rational leibniz_det(const QMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total(0);
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    Rational t = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && !t.is_zero(); ++i) t *= m(i, perm[i]);
    total += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// w^w by bilinear expansion and sorting, independent of the library's
/// closed formula. Result indexed like FourVector.
inline std::array<Rational, kQuads> wedge_square_by_expansion(const AlternatingForm& w) {
  std::array<Rational, kQuads> out;
  out.fill(Rational(0));
  for (std::size_t a = 0; a < kPairs; ++a)
    for (std::size_t b = 0; b < kPairs; ++b) {
      if (w[a].is_zero() || w[b].is_zero()) continue;
      auto [i, j] = pair_at(a);
      auto [k, l] = pair_at(b);
      std::vector<std::size_t> idx{i, j, k, l};
      std::vector<std::size_t> sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
      int sign = 1;
      for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = x + 1; y < 4; ++y)
          if (idx[x] > idx[y]) sign = -sign;
      std::size_t q = quad_index(sorted[0], sorted[1], sorted[2], sorted[3]);
      out[q] += w[a] * w[b] * Rational(sign);
    }
  return out;
}

/// Random system of the given size whose coefficients vanish on the listed
/// 0-based pairs.
inline LinearSystem pattern_fill(Gen& g, std::size_t size, const std::vector<std::pair<int, int>>& zero_pairs) {
  while (true) {
    std::vector<AlternatingForm> gens;
    for (std::size_t k = 0; k < size; ++k) {
      AlternatingForm w = g.form();
      for (auto [i, j] : zero_pairs) w[pair_index(i, j)] = 0;
      gens.push_back(w);
    }
    try {
      return LinearSystem(gens);
    } catch (const DependentGenerators&) {
    }
  }
}

/// Zero pairs of the nonstable (offset 6) or unstable (offset 7) pattern for
/// s, 0-based: i < s, i < j < offset - s.
inline std::vector<std::pair<int, int>> pattern_pairs(int s, int offset) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < offset - s; ++j) out.emplace_back(i, j);
  return out;
}

}  // namespace testing_support
