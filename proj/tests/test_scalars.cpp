#include <gtest/gtest.h>

#include "skewforms/scalars.hpp"
#include "skewforms/univariate.hpp"
#include "support.hpp"

using namespace skewforms;
using testing_support::Gen;

namespace {

// Inverse of a mod p by trying every residue.
std::uint32_t inverse_by_search(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  return 0;
}

}  // namespace

TEST(Rational, NormalizedStorage) {
  Rational r(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(mpz_class(0), mpz_class(7)).denominator(), 1);
  EXPECT_EQ(Rational::parse("-10/4"), Rational(mpz_class(-5), mpz_class(2)));
  EXPECT_EQ(Rational::parse("7").str(), "7");
  EXPECT_EQ(Rational::parse("3/6").str(), "1/2");
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, FieldAxiomsOnRandomTriples) {
  Gen g(11);
  for (int t = 0; t < 1000; ++t) {
    Rational a = g.rational(), b = g.rational(), c = g.rational();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) EXPECT_EQ(a * inverse(a), Rational(1));
  }
}

TEST(PrimeField, FieldAxiomsOnRandomTriples) {
  Gen g(12);
  for (std::uint32_t p : {5u, 7u, 11u, 101u}) {
    ModulusScope scope(p);
    for (int t = 0; t < 1000; ++t) {
      Fp a(g.integer(0, 1000)), b(g.integer(-1000, 1000)), c(g.integer(0, 1000));
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_LT(a.value(), p);
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Fp(1));
    }
  }
}

TEST(PrimeField, LiteralsNeedAScope) {
  EXPECT_THROW(Fp(3), std::logic_error);
  EXPECT_NO_THROW(Fp(0));
  EXPECT_THROW(ModulusScope(9), BadPrime);
  EXPECT_THROW(ModulusScope(2), BadPrime);
}

TEST(ReduceMod, Examples) {
  EXPECT_EQ(reduce_mod(Rational::parse("1/2"), 7).value(), 4u);
  EXPECT_EQ(reduce_mod(Rational(0), 5).value(), 0u);
  // -1/3 mod 7 from an exhaustive inverse search.
  std::uint32_t inv3 = inverse_by_search(3, 7);
  EXPECT_EQ(reduce_mod(Rational::parse("-1/3"), 7).value(), (7 - inv3) % 7);
  EXPECT_EQ(reduce_mod(Rational::parse("-1/3"), 7).value(), 2u);
}

TEST(ReduceMod, RejectsBadPrimes) {
  EXPECT_THROW(reduce_mod(Rational::parse("1/7"), 7), BadPrime);
  EXPECT_THROW(reduce_mod(Rational(1), 8), BadPrime);
  EXPECT_THROW(reduce_mod(Rational(1), 2), BadPrime);
}

TEST(ReduceMod, IsARingMorphism) {
  Gen g(13);
  for (std::uint32_t p : {5u, 7u, 11u}) {
    for (int t = 0; t < 1000; ++t) {
      Rational a = g.rational(), b = g.rational(), c = g.rational();
      try {
        Fp lhs = reduce_mod(a * b + c, p);
        Fp rhs = reduce_mod(a, p) * reduce_mod(b, p) + reduce_mod(c, p);
        EXPECT_EQ(lhs, rhs);
      } catch (const BadPrime&) {
        // Some denominator is divisible by p; the identity is not defined.
      }
    }
  }
}

TEST(RationalReconstruction, RecoversSmallFractions) {
  Gen g(14);
  const std::uint64_t m = 1000003;
  for (int t = 0; t < 300; ++t) {
    Rational r(mpz_class(g.integer(-300, 300)), mpz_class(g.integer(1, 300)));
    auto image = reduce_mod(r, static_cast<std::uint32_t>(m)).value();
    auto back = rational_reconstruct(image, m);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, r);
  }
  // At p = 7 only numerators and denominators of size 1 survive.
  EXPECT_EQ(*rational_reconstruct(6, 7), Rational(-1));
  EXPECT_EQ(*rational_reconstruct(0, 7), Rational(0));
}

TEST(MultiPoly, EvaluationExamples) {
  using P = MultiPoly<Rational>;
  P x0 = P::variable(2, 0), x1 = P::variable(2, 1);
  std::vector<Rational> pt{2, 3};
  EXPECT_EQ(poly_eval(x0 * x1, std::span<const Rational>(pt)), Rational(6));
  EXPECT_EQ(poly_eval(P(2), std::span<const Rational>(pt)), Rational(0));
  P cubic = x0 * x0 * x0 - x1 * x1 * x1;
  std::vector<Rational> ones{1, 1};
  EXPECT_EQ(poly_eval(cubic, std::span<const Rational>(ones)), Rational(0));
  EXPECT_EQ(cubic.homogeneous_degree(), 3);
  EXPECT_EQ((x0 + P::constant(2, 1)).homogeneous_degree(), -2);
  EXPECT_EQ(P(2).homogeneous_degree(), -1);
}

TEST(MultiPoly, ArityIsChecked) {
  using P = MultiPoly<Rational>;
  std::vector<Rational> pt{1, 2, 3};
  EXPECT_THROW(poly_eval(P::variable(2, 0), std::span<const Rational>(pt)), ArityMismatch);
  EXPECT_THROW(P::variable(2, 0) + P::variable(3, 0), ArityMismatch);
}

TEST(MultiPoly, NoZeroCoefficientsStored) {
  using P = MultiPoly<Rational>;
  P x = P::variable(1, 0);
  P d = x - x;
  EXPECT_TRUE(d.is_zero());
  EXPECT_EQ(d.term_count(), 0u);
  EXPECT_EQ(to_string(x * x - P::constant(1, 2)), "X0^2 - 2");
}

TEST(MultiPoly, WorksOverPrimeFields) {
  ModulusScope scope(7);
  using P = MultiPoly<Fp>;
  P x = P::variable(1, 0);
  P f = x * x * Fp(3) + P::constant(1, Fp(1));
  std::vector<Fp> pt{Fp(2)};
  EXPECT_EQ(f.eval(pt).value(), 6u);  // 3*4 + 1 = 13 = 6 mod 7
}

TEST(UniPoly, GcdAndRationalRoots) {
  // (x - 1/2)(x + 3)(x^2 + 1)
  UniPoly f = UniPoly::linear(Rational::parse("-1/2"), 1) * UniPoly::linear(3, 1) * UniPoly({1, 0, 1});
  auto roots = rational_roots(f);
  ASSERT_EQ(roots.rational.size(), 2u);
  EXPECT_EQ(roots.rational[0], Rational(-3));
  EXPECT_EQ(roots.rational[1], Rational::parse("1/2"));
  EXPECT_EQ(roots.other_degree, 2);
  UniPoly h = UniPoly::linear(3, 1) * UniPoly::linear(-2, 1);
  EXPECT_EQ(gcd(f, h), UniPoly::linear(3, 1));
  auto z = rational_roots(UniPoly({0, 0, 5}));
  ASSERT_EQ(z.rational.size(), 1u);
  EXPECT_TRUE(z.rational[0].is_zero());
  EXPECT_THROW(rational_roots(UniPoly()), std::invalid_argument);
}
