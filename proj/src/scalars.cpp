#include "skewforms/scalars.hpp"

#include <cctype>
#include <sstream>

namespace skewforms {

namespace {
thread_local std::uint32_t g_modulus = 0;
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  };
  trim(s);
  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(num.begin());
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string Rational::str() const { return q_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational inverse(const Rational& r) { return Rational(1) / r; }

std::uint32_t Fp::current_modulus() { return g_modulus; }

std::uint32_t Fp::literal_without_scope(long v) {
  if (v != 0) throw std::logic_error("nonzero F_p literal outside a ModulusScope");
  return 0;
}

namespace {
std::uint32_t common_modulus(std::uint32_t a, std::uint32_t b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw std::invalid_argument("mixing elements of different prime fields");
}
}  // namespace

Fp& Fp::operator+=(const Fp& o) {
  p_ = common_modulus(p_, o.p_);
  std::uint64_t s = static_cast<std::uint64_t>(v_) + o.v_;
  v_ = static_cast<std::uint32_t>(p_ == 0 ? s : s % p_);
  return *this;
}

Fp& Fp::operator-=(const Fp& o) { return *this += -o; }

Fp& Fp::operator*=(const Fp& o) {
  p_ = common_modulus(p_, o.p_);
  std::uint64_t s = static_cast<std::uint64_t>(v_) * o.v_;
  v_ = static_cast<std::uint32_t>(p_ == 0 ? s : s % p_);
  return *this;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
  // Extended Euclid on (v, p).
  std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m; a = m; m = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
  }
  std::int64_t r = x0 % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Fp(static_cast<std::uint32_t>(r), p_);
}

Fp& Fp::operator/=(const Fp& o) { return *this *= o.inverse(); }

ModulusScope::ModulusScope(std::uint32_t p) : saved_(g_modulus) {
  if (!is_prime(p) || p < 3) throw BadPrime("modulus must be an odd prime, got " + std::to_string(p));
  g_modulus = p;
}

ModulusScope::~ModulusScope() { g_modulus = saved_; }

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Fp reduce_mod(const Rational& x, std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw BadPrime("not an odd prime: " + std::to_string(p));
  mpz_class den = x.denominator() % p;
  if (den == 0) throw BadPrime("prime " + std::to_string(p) + " divides the denominator of " + x.str());
  mpz_class num = x.numerator() % p;
  if (num < 0) num += p;
  Fp n(static_cast<std::uint32_t>(num.get_ui()), p);
  Fp d(static_cast<std::uint32_t>(den.get_ui()), p);
  return n / d;
}

std::optional<Rational> rational_reconstruct(std::uint64_t a, std::uint64_t m) {
  a %= m;
  // Half-extended Euclid on (m, a), stopping once the remainder drops below
  // sqrt(m/2).
  __int128 r0 = m, r1 = a, t0 = 0, t1 = 1;
  auto below_bound = [m](__int128 v) { return 2 * v * v < static_cast<__int128>(m); };
  while (r1 != 0 && !below_bound(r1)) {
    __int128 q = r0 / r1;
    __int128 r2 = r0 - q * r1; r0 = r1; r1 = r2;
    __int128 t2 = t0 - q * t1; t0 = t1; t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  __int128 num = r1, den = t1;
  if (den < 0) { num = -num; den = -den; }
  if (!below_bound(den)) return std::nullopt;
  Rational out(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  // The candidate must really map back to a.
  mpz_class lhs = (out.numerator() - out.denominator() * mpz_class(static_cast<unsigned long>(a))) %
                  mpz_class(static_cast<unsigned long>(m));
  if (lhs != 0) return std::nullopt;
  return out;
}

std::string to_string(const MultiPoly<Rational>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest monomials first reads more naturally.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) os << (c.sign() < 0 ? "-" : "");
    else os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    bool constant = true;
    for (auto x : e) constant = constant && x == 0;
    bool wrote = false;
    if (!mag.is_one() || constant) { os << mag.str(); wrote = true; }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << 'X' << i;
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace skewforms
