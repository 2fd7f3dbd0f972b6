#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "skewforms/scroll.hpp"
#include "support.hpp"

using namespace skewforms;
using namespace testing_support;

namespace {

LinearSystem pi_g() { return LinearSystem({e(1, 4) + e(2, 5), e(1, 6) + e(3, 5), e(2, 6) - e(3, 4)}); }

bool proportional(const AlternatingForm& a, const AlternatingForm& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  std::optional<Rational> ratio;
  for (std::size_t k = 0; k < kPairs; ++k) {
    if (a[k].is_zero() != b[k].is_zero()) return false;
    if (a[k].is_zero()) continue;
    Rational r = a[k] / b[k];
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return true;
}

bool rank_at_most_2_mod(const FpForm& w, long p) {
  std::vector<std::vector<long>> rows(6, std::vector<long>(6, 0));
  for (std::size_t k = 0; k < kPairs; ++k) {
    auto [i, j] = pair_at(k);
    rows[i][j] = w[k];
    rows[j][i] = oracle::mod(-static_cast<long>(w[k]), p);
  }
  return oracle::rank_mod(rows, p) <= 2;
}

// Integer representatives of the points of P^2(F_p) as rational combinations.
std::vector<AlternatingForm> plane_points(const LinearSystem& b, long p) {
  std::vector<AlternatingForm> out;
  for (const auto& x : oracle::projective_points(3, p))
    out.push_back(b.combination({Rational(x[0]), Rational(x[1]), Rational(x[2])}));
  return out;
}

}  // namespace

TEST(Scroll, ConstructionOnNormalForm) {
  ScrollDatum z = make_scroll(pi_g());
  EXPECT_EQ(z.gauss_span.size(), 6u);
  EXPECT_EQ(z.lambda.size(), 9u);
  EXPECT_THROW(make_scroll(LinearSystem({e(1, 3) + e(2, 4), e(1, 4) + e(2, 5), e(1, 5) + e(2, 6)})), NotGeneralType);
}

TEST(Scroll, RhoExamples) {
  ScrollDatum z = make_scroll(pi_g());
  EXPECT_TRUE(proportional(rho(z, z.base[0]), e(1, 2)));
  EXPECT_TRUE(proportional(rho(z, z.base[1]), e(1, 3)));
  EXPECT_TRUE(proportional(rho(z, z.base[2]), e(2, 3)));
  EXPECT_THROW(rho(z, e(1, 2)), NotInPlane);
}

TEST(Scroll, PsiExamples) {
  ScrollDatum z = make_scroll(pi_g());
  const AlternatingForm& w0 = z.base[0];
  EXPECT_TRUE(proportional(psi(z, w0, 1, 0), e(1, 2)));
  EXPECT_TRUE(proportional(psi(z, w0, 0, 1), e(4, 5)));
  AlternatingForm mid = psi(z, w0, 1, 1);
  EXPECT_TRUE(wedge_square(mid).is_zero());
  EXPECT_TRUE(proportional(mid, wedge(unit(1) + unit(5), unit(2) - unit(4))));
  // The fiber expansion t0^2 e12 + t0 t1 w0 + t1^2 e45 up to the sign of e12, e45.
  for (int t1 : {-2, 3}) {
    AlternatingForm expected = psi(z, w0, 1, 0) + Rational(t1) * w0 + Rational(t1 * t1) * psi(z, w0, 0, 1);
    EXPECT_EQ(psi(z, w0, 1, t1), expected);
  }
}

TEST(Scroll, PsiIsRankTwoAndInLambda) {
  ScrollDatum z = make_scroll(pi_g());
  Gen g(31);
  for (int t = 0; t < 200; ++t) {
    AlternatingForm w = z.base.combination({g.rational(), g.rational(), g.rational()});
    if (w.is_zero()) continue;
    Rational t0 = g.rational(), t1 = g.rational();
    if (t0.is_zero() && t1.is_zero()) continue;
    AlternatingForm s = psi(z, w, t0, t1);
    EXPECT_FALSE(s.is_zero());
    EXPECT_TRUE(wedge_square(s).is_zero());
    for (const auto& b : z.gauss_span) EXPECT_TRUE(pairing(b, s).is_zero());
    EXPECT_TRUE(z_membership(z, s));
  }
}

TEST(Scroll, FibersOverF7AreConics) {
  ScrollDatum z = make_scroll(pi_g());
  const long p = 7;
  std::vector<std::vector<std::uint32_t>> gauss;
  for (const auto& b : z.gauss_span) {
    std::vector<std::uint32_t> row;
    for (const auto& c : b.c) row.push_back(static_cast<std::uint32_t>(oracle::reduce_rational(c, p)));
    gauss.push_back(row);
  }
  for (const auto& w : plane_points(z.base, p)) {
    auto fiber = conic_fiber(z, w, p);
    ASSERT_EQ(fiber.size(), static_cast<std::size_t>(p + 1));
    std::set<FpForm> distinct(fiber.begin(), fiber.end());
    EXPECT_EQ(distinct.size(), fiber.size());
    for (const auto& f : fiber) {
      EXPECT_TRUE(rank_at_most_2_mod(f, p));
      for (const auto& b : gauss) {
        long s = 0;
        for (std::size_t k = 0; k < kPairs; ++k) s += static_cast<long>(b[k]) * f[k];
        EXPECT_EQ(oracle::mod(s, p), 0);
      }
    }
  }
}

TEST(Scroll, FiberEndpointsOverOmega0) {
  ScrollDatum z = make_scroll(pi_g());
  auto fiber = conic_fiber(z, z.base[0], 7);
  FpForm e12{}, e45{};
  e12[pair_index(0, 1)] = 1;
  e45[pair_index(3, 4)] = 1;
  EXPECT_NE(std::find(fiber.begin(), fiber.end(), e12), fiber.end());
  EXPECT_NE(std::find(fiber.begin(), fiber.end(), e45), fiber.end());
}

TEST(Scroll, Membership) {
  ScrollDatum z = make_scroll(pi_g());
  EXPECT_TRUE(z_membership(z, psi(z, z.base[1], 1, 1)));
  EXPECT_FALSE(z_membership(z, e(1, 2) + e(3, 4)));  // rank 4
  EXPECT_TRUE(z_membership(z, e(1, 3)));              // the fiber point over w1 at t = [1:0]
  EXPECT_FALSE(z_membership(z, e(1, 4)));             // rank 2 but off Lambda
  EXPECT_FALSE(z_membership(z, AlternatingForm()));
}

TEST(Scroll, EveryPointLiesOnOneFiber) {
  ScrollDatum z = make_scroll(pi_g());
  const long p = 5;
  auto points = plane_points(z.base, p);
  std::vector<std::vector<FpForm>> fibers;
  for (const auto& w : points) fibers.push_back(conic_fiber(z, w, p));
  Gen g(32);
  for (int t = 0; t < 100; ++t) {
    std::size_t wi = static_cast<std::size_t>(g.integer(0, static_cast<int>(points.size()) - 1));
    std::size_t ti = static_cast<std::size_t>(g.integer(0, p));
    const FpForm& target = fibers[wi][ti];
    int hits = 0;
    for (const auto& f : fibers)
      for (const auto& x : f) hits += x == target;
    EXPECT_EQ(hits, 1);
  }
}

TEST(Scroll, PointCounts) {
  ScrollDatum z = make_scroll(pi_g());
  for (std::uint32_t p : {5u, 7u}) {
    const std::uint64_t expected = (p * p + p + 1) * (p + 1);
    EXPECT_EQ(scroll_image_count(z, p), expected);
    EXPECT_EQ(lambda_grassmannian_count(z, p, 1), expected);
  }
  EXPECT_EQ(scroll_image_count(z, 5), 186u);
  EXPECT_EQ(scroll_image_count(z, 7), 456u);
}

TEST(Scroll, RestrictedQuadricSystem) {
  ScrollDatum z = make_scroll(pi_g());
  EXPECT_EQ(restricted_quadric_system_dim(z), 14);
  // Independent of the chosen basis of Lambda.
  Gen g(33);
  for (int t = 0; t < 2; ++t) {
    std::vector<AlternatingForm> basis;
    for (std::size_t i = 0; i < z.lambda.size(); ++i) {
      AlternatingForm w;
      for (const auto& l : z.lambda) w += Rational(g.integer(-3, 3)) * l;
      basis.push_back(w);
    }
    if (LinearSystem(basis).size() != 9) continue;
    EXPECT_EQ(restricted_quadric_system_dim(basis), 14);
  }
  // Tangent space of the Grassmannian at e1^e2: frozen value.
  std::vector<AlternatingForm> tangent{e(1, 2)};
  for (int j = 3; j <= 6; ++j) {
    tangent.push_back(e(1, j));
    tangent.push_back(e(2, j));
  }
  int tangent_dim = restricted_quadric_system_dim(tangent);
  EXPECT_LT(tangent_dim, 14);
  EXPECT_EQ(tangent_dim, 5);
}

TEST(Scroll, FixedParameterSlicesArePlanesInTheGrassmannian) {
  ScrollDatum z = make_scroll(pi_g());
  Gen g(34);
  for (auto [t0, t1] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}, std::pair{2, -3}}) {
    std::vector<AlternatingForm> images;
    for (std::size_t i = 0; i < 3; ++i) images.push_back(psi(z, z.base[i], t0, t1));
    images.push_back(psi(z, z.base[0] + z.base[1], t0, t1));
    images.push_back(psi(z, z.base[1] - z.base[2], t0, t1));
    QMatrix m(images.size(), kPairs);
    for (std::size_t r = 0; r < images.size(); ++r)
      for (std::size_t k = 0; k < kPairs; ++k) m(r, k) = images[r][k];
    EXPECT_EQ(rank(m), 3u);
    LinearSystem slice({images[0], images[1], images[2]});
    for (int s = 0; s < 10; ++s) {
      AlternatingForm x = slice.combination({g.rational(), g.rational(), g.rational()});
      EXPECT_TRUE(wedge_square(x).is_zero());
    }
  }
}
