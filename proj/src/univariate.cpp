#include "skewforms/univariate.hpp"

#include <algorithm>
#include <tuple>

namespace skewforms {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.c_;
  int db = b.degree();
  std::vector<Rational> q(std::max(0, a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    Rational f = r[k] / b.leading();
    if (f.is_zero()) continue;
    q[k - db] = f;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= f * b.c_[i];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = c_;
  Rational l = leading();
  for (auto& x : c) x /= l;
  return UniPoly(std::move(c));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = UniPoly::divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

UniPoly derivative(const UniPoly& f) {
  std::vector<Rational> c;
  for (std::size_t k = 1; k < f.coeffs().size(); ++k) c.push_back(f.coeffs()[k] * Rational(static_cast<long>(k)));
  return UniPoly(std::move(c));
}

std::vector<UniPoly> sturm_chain(const UniPoly& f) {
  std::vector<UniPoly> chain{f, derivative(f)};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    UniPoly r = UniPoly::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_changes(const std::vector<UniPoly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    int s = p.eval(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

mpz_class floor_of(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
  return q;
}

// Fraction with the smallest denominator in [a, b], for 0 < a <= b.
Rational simplest_positive(const Rational& a, const Rational& b) {
  mpz_class n = floor_of(a);
  if (Rational(n) == a) return a;
  if (n < floor_of(b)) return Rational(n + 1);
  return Rational(n) + inverse(simplest_positive(inverse(b - Rational(n)), inverse(a - Rational(n))));
}

Rational simplest_between(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 && b.sign() >= 0) return Rational(0);
  if (b.sign() < 0) return -simplest_positive(-b, -a);
  return simplest_positive(a, b);
}

// Distinct rational roots of a squarefree polynomial with integer
// coefficients and nonzero constant term: isolate real roots exactly, then
// snap each isolating interval to the only fraction whose denominator can
// divide the leading coefficient.
std::vector<Rational> rational_roots_squarefree(const UniPoly& f, const mpz_class& lead) {
  std::vector<Rational> out;
  if (f.degree() < 1) return out;
  Rational bound(1);
  for (const auto& c : f.coeffs()) {
    Rational r = c / f.leading();
    if (r.sign() < 0) r = -r;
    if (bound < r + Rational(1)) bound = r + Rational(1);
  }
  mpz_class l = abs(lead);
  Rational target = inverse(Rational(2 * l * l));
  auto chain = sturm_chain(f);
  // Invariant: exactly `count` roots in (a, b].
  std::vector<std::tuple<Rational, Rational, int>> work;
  int total = sign_changes(chain, -bound) - sign_changes(chain, bound);
  if (total > 0) work.emplace_back(-bound, bound, total);
  while (!work.empty()) {
    auto [a, b, count] = work.back();
    work.pop_back();
    if (count == 1 && b - a < target) {
      Rational cand = simplest_between(a, b);
      if (!(cand == a) && f.eval(cand).is_zero()) out.push_back(cand);
      continue;
    }
    Rational m = (a + b) / Rational(2);
    int left = sign_changes(chain, a) - sign_changes(chain, m);
    if (left > 0) work.emplace_back(a, m, left);
    if (count - left > 0) work.emplace_back(m, b, count - left);
  }
  return out;
}

}  // namespace

RootSet rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<Rational> roots;
  UniPoly g = f;
  if (g.degree() > 0 && g.coeffs().front().is_zero()) {
    roots.push_back(Rational(0));
    while (g.degree() > 0 && g.coeffs().front().is_zero()) g = UniPoly::divmod(g, UniPoly::linear(0, 1)).first;
  }
  if (g.degree() > 0) {
    UniPoly sq = UniPoly::divmod(g, gcd(g, derivative(g))).first;
    mpz_class lcm = 1;
    for (const auto& c : sq.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<Rational> ic;
    for (const auto& c : sq.coeffs()) ic.push_back(c * Rational(lcm));
    UniPoly integral(ic);
    for (const auto& r : rational_roots_squarefree(integral, integral.leading().numerator())) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  RootSet out;
  out.rational = roots;
  UniPoly rest = f;
  for (const auto& r : roots) {
    UniPoly lin = UniPoly::linear(-r, 1);
    while (rest.degree() > 0 && rest.eval(r).is_zero()) rest = UniPoly::divmod(rest, lin).first;
  }
  out.other_degree = std::max(0, rest.degree());
  return out;
}

}  // namespace skewforms
