#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewforms/matrix.hpp"
#include "skewforms/scalars.hpp"

namespace skewforms {

constexpr std::size_t kDim = 6;
constexpr std::size_t kPairs = 15;  // C(6,2)
constexpr std::size_t kQuads = 15;  // C(6,4)

class RankError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Position of the pair (i, j), 0-based with i < j, in lexicographic order.
std::size_t pair_index(std::size_t i, std::size_t j);
std::pair<std::size_t, std::size_t> pair_at(std::size_t k);
/// Position of the sorted quadruple i < j < k < l in lexicographic order.
std::size_t quad_index(std::size_t i, std::size_t j, std::size_t k, std::size_t l);
std::array<std::size_t, 4> quad_at(std::size_t q);

/// Skew form on the six-dimensional space, stored by its coefficients on
/// e_i^e_j (i < j) in lexicographic pair order.
class AlternatingForm {
 public:
  AlternatingForm() { c_.fill(Rational(0)); }
  explicit AlternatingForm(const std::array<Rational, kPairs>& c) : c_(c) {}

  /// e_i^e_j for 0-based i != j (sign follows the order given).
  static AlternatingForm basis(std::size_t i, std::size_t j);
  static AlternatingForm from_vector(const QVec& v);
  /// Reads the strict upper triangle; throws if m is not skew.
  static AlternatingForm from_matrix(const QMatrix& m);

  /// Coefficient of e_i^e_j for any ordered pair of distinct indices.
  Rational coeff(std::size_t i, std::size_t j) const;
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  Rational& operator[](std::size_t k) { return c_[k]; }
  const std::array<Rational, kPairs>& coefficients() const { return c_; }
  QVec to_vector() const { return QVec(c_.begin(), c_.end()); }

  /// The skew matrix M with M[i][j] = m_ij.
  QMatrix matrix() const;
  bool is_zero() const;

  AlternatingForm& operator+=(const AlternatingForm& o);
  AlternatingForm& operator-=(const AlternatingForm& o);
  AlternatingForm& operator*=(const Rational& s);
  friend AlternatingForm operator+(AlternatingForm a, const AlternatingForm& b) { return a += b; }
  friend AlternatingForm operator-(AlternatingForm a, const AlternatingForm& b) { return a -= b; }
  friend AlternatingForm operator-(AlternatingForm a) { return a *= Rational(-1); }
  friend AlternatingForm operator*(AlternatingForm a, const Rational& s) { return a *= s; }
  friend AlternatingForm operator*(const Rational& s, AlternatingForm a) { return a *= s; }
  friend bool operator==(const AlternatingForm& a, const AlternatingForm& b) { return a.c_ == b.c_; }
  friend bool operator!=(const AlternatingForm& a, const AlternatingForm& b) { return !(a == b); }

  std::string str() const;

 private:
  std::array<Rational, kPairs> c_;
};

/// Element of the second exterior power of the dual basis u_1..u_6.
struct BiVector {
  std::array<Rational, kPairs> c;
  BiVector() { c.fill(Rational(0)); }
  static BiVector basis(std::size_t i, std::size_t j);
  bool is_zero() const;
  friend bool operator==(const BiVector& a, const BiVector& b) { return a.c == b.c; }
};

/// Element of the fourth exterior power, indexed by sorted quadruples.
struct FourVector {
  std::array<Rational, kQuads> c;
  FourVector() { c.fill(Rational(0)); }
  bool is_zero() const;
  friend bool operator==(const FourVector& a, const FourVector& b) { return a.c == b.c; }
};

/// Sum of the matching coefficients.
Rational pairing(const BiVector& b, const AlternatingForm& w);
/// omega(u, v) = u^T M v.
Rational evaluate(const AlternatingForm& w, const QVec& u, const QVec& v);
/// x^y for covectors: m_ij = x_i y_j - x_j y_i.
AlternatingForm wedge(const QVec& x, const QVec& y);
BiVector wedge_vectors(const QVec& u, const QVec& v);
FourVector wedge(const AlternatingForm& a, const AlternatingForm& b);
/// The same product for two bivectors; zero iff the bivector is decomposable
/// when a == b.
FourVector wedge(const BiVector& a, const BiVector& b);

class Subspace {
 public:
  enum class Ambient { W, WDual };

  Subspace() = default;
  /// Span of the given rows, stored in reduced echelon form.
  static Subspace span(Ambient ambient, const std::vector<QVec>& rows);
  static Subspace zero(Ambient ambient) { return span(ambient, {}); }
  static Subspace whole(Ambient ambient);

  Ambient ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVec>& basis() const { return basis_; }
  bool contains(const QVec& v) const;
  bool contains(const Subspace& o) const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// Annihilator in the dual ambient.
  Subspace annihilator() const;
  /// Span of {T v} over the basis.
  Subspace image(const QMatrix& t) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Ambient ambient_ = Ambient::W;
  std::vector<QVec> basis_;
};

/// Invertible 6x6 matrix acting on forms by M -> g M g^T.
class GroupElement {
 public:
  /// Throws std::domain_error when det(m) = 0.
  explicit GroupElement(QMatrix m);
  static GroupElement identity() { return GroupElement(QMatrix::identity(kDim)); }
  const QMatrix& matrix() const { return m_; }
  Rational det() const;
  GroupElement inverse() const;
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return GroupElement(a.m_ * b.m_);
  }

 private:
  QMatrix m_;
};

int form_rank(const AlternatingForm& w);
/// {u in W : omega(u, .) = 0}.
Subspace form_kernel(const AlternatingForm& w);

/// Pfaffian of a 6x6 skew matrix over any commutative ring, by expansion
/// along the first row; normalized so Pf(e12 + e34 + e56) = 1.
template <class R>
R pfaffian_of(const std::array<std::array<R, kDim>, kDim>& a, const R& zero, const R& one) {
  auto rec = [&](auto&& self, const std::vector<std::size_t>& idx) -> R {
    if (idx.empty()) return one;
    R acc = zero;
    for (std::size_t j = 1; j < idx.size(); ++j) {
      const R& entry = a[idx[0]][idx[j]];
      if (is_zero(entry)) continue;
      std::vector<std::size_t> rest;
      for (std::size_t k = 1; k < idx.size(); ++k)
        if (k != j) rest.push_back(idx[k]);
      R term = entry * self(self, rest);
      if (j % 2 == 1) acc += term;
      else acc -= term;
    }
    return acc;
  };
  return rec(rec, {0, 1, 2, 3, 4, 5});
}

Rational pfaffian(const AlternatingForm& w);
FourVector wedge_square(const AlternatingForm& w);
/// Image of w^w under the identification with the second exterior power of
/// W given by the volume form e1^...^e6. Throws RankError unless rank 4.
BiVector gauss_map(const AlternatingForm& w);
/// Bivector obtained from a four-form by the same identification.
BiVector hodge(const FourVector& f);
AlternatingForm act(const GroupElement& g, const AlternatingForm& w);
/// Transport of a subspace of W matching act: U -> g^{-T} U.
Subspace transport(const GroupElement& g, const Subspace& u);

/// Membership test for the tangent space of the Grassmannian of 2-planes
/// at a rank-2 form.
class TangentSpace {
 public:
  explicit TangentSpace(Subspace perp) : perp_(std::move(perp)) {}
  bool contains(const AlternatingForm& theta) const;
  /// The 4-dimensional subspace of W on which members vanish.
  const Subspace& isotropic_part() const { return perp_; }

 private:
  Subspace perp_;
};

/// Throws RankError unless rank(w) = 2.
TangentSpace gr_tangent_space(const AlternatingForm& w);

/// 2-plane of covectors of a rank-2 form w = x^y, returned as (x, y) with
/// x^y = w exactly.
std::pair<QVec, QVec> decompose_rank2(const AlternatingForm& w);

/// True if a and b agree up to a nonzero scalar.
bool projectively_equal(const AlternatingForm& a, const AlternatingForm& b);
bool projectively_equal(const BiVector& a, const BiVector& b);

}  // namespace skewforms
