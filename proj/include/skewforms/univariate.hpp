#pragma once

#include <stdexcept>
#include <vector>

#include "skewforms/scalars.hpp"

namespace skewforms {

/// Dense univariate polynomial over the rationals; coeffs[k] multiplies x^k
/// and the leading coefficient is never zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  /// a + b*x
  static UniPoly linear(const Rational& a, const Rational& b) { return UniPoly({a, b}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational eval(const Rational& x) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a) { return UniPoly() - a; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  /// Quotient and remainder; throws std::domain_error on division by zero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  UniPoly monic() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct RootSet {
  std::vector<Rational> rational;  ///< distinct rational roots, ascending
  int other_degree = 0;           ///< degree of the factor with no rational roots
};

/// Distinct rational roots by the rational root theorem, plus the degree of
/// the remaining factor. The zero polynomial is rejected.
RootSet rational_roots(const UniPoly& f);

}  // namespace skewforms
