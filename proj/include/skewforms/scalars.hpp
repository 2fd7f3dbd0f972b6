#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewforms {

class BadPrime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
  /// input or a zero denominator.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

Rational inverse(const Rational& r);

/// Element of F_p. The modulus travels with the value; integer literals
/// are interpreted in the modulus installed by the innermost ModulusScope
/// of the current thread.
class Fp {
 public:
  // A zero built outside any ModulusScope has modulus 0 and adopts the
  // modulus of whatever it is combined with.
  Fp() : v_(0), p_(current_modulus()) {}
  Fp(long v) : p_(current_modulus()) { v_ = p_ == 0 ? literal_without_scope(v) : normalize(v, p_); }  // NOLINT
  Fp(int v) : Fp(static_cast<long>(v)) {}                          // NOLINT
  Fp(std::uint32_t value, std::uint32_t p) : v_(p == 0 ? value : value % p), p_(p) {}

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o);
  Fp inverse() const;

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend Fp operator-(const Fp& a) { return Fp(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

  static std::uint32_t current_modulus();

 private:
  friend class ModulusScope;
  static std::uint32_t literal_without_scope(long v);
  static std::uint32_t normalize(long v, std::uint32_t p) {
    long r = v % static_cast<long>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + static_cast<long>(p) : r);
  }
  std::uint32_t v_;
  std::uint32_t p_;
};

inline Fp inverse(const Fp& x) { return x.inverse(); }

/// Installs p as the modulus for Fp literals on this thread until the scope
/// ends.
class ModulusScope {
 public:
  explicit ModulusScope(std::uint32_t p);
  ~ModulusScope();
  ModulusScope(const ModulusScope&) = delete;
  ModulusScope& operator=(const ModulusScope&) = delete;

 private:
  std::uint32_t saved_;
};

bool is_prime(std::uint32_t p);

/// Image of x in F_p. Throws BadPrime when p divides the denominator or p
/// is not an odd prime.
Fp reduce_mod(const Rational& x, std::uint32_t p);

/// Half-modulus rational reconstruction: the unique r/s with |r|, s below
/// sqrt(m/2) and r = s*a mod m, if any.
std::optional<Rational> rational_reconstruct(std::uint64_t a, std::uint64_t m);

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

using Exponents = std::vector<std::uint16_t>;

/// Sparse multivariate polynomial; zero coefficients are never stored.
template <class S>
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const S& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }
  static MultiPoly variable(std::size_t nvars, std::size_t index, const S& coeff = S(1)) {
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e.at(index) = 1;
    p.add_term(e, coeff);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Exponents& e, const S& c) {
    if (e.size() != nvars_) throw ArityMismatch("exponent vector length differs from variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  S coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? S(0) : it->second;
  }

  /// Total degree if every term has the same degree, -1 for the zero
  /// polynomial, -2 when inhomogeneous.
  int homogeneous_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (auto x : e) d += x;
      if (deg == -1) deg = d;
      else if (deg != d) return -2;
    }
    return deg;
  }

  S eval(std::span<const S> point) const {
    if (point.size() != nvars_) throw ArityMismatch("point length differs from variable count");
    S acc(0);
    for (const auto& [e, c] : terms_) {
      S t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (std::uint16_t k = 0; k < e[i]; ++k) t *= point[i];
      acc += t;
    }
    return acc;
  }

  template <class T>
  MultiPoly<T> map_coefficients(const std::function<T(const S&)>& f) const {
    MultiPoly<T> out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const S& s) {
    if (s.is_zero()) { terms_.clear(); return *this; }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) { MultiPoly z(a.nvars_); return z -= a; }
  friend MultiPoly operator*(MultiPoly a, const S& s) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        out.add_term(e, ca * cb);
      }
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  void check_arity(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw ArityMismatch("polynomials over different variable counts");
  }
  std::size_t nvars_ = 0;
  std::map<Exponents, S> terms_;
};

template <class S>
bool is_zero(const MultiPoly<S>& p) { return p.is_zero(); }

template <class S>
S poly_eval(const MultiPoly<S>& f, std::span<const S> point) { return f.eval(point); }

/// Human-readable rendering such as "X0^3 - 2*X1*X2".
std::string to_string(const MultiPoly<Rational>& f);

}  // namespace skewforms
