#include <gtest/gtest.h>

#include "skewforms/finite_field.hpp"
#include "skewforms/linsys.hpp"
#include "support.hpp"

using namespace skewforms;
using namespace testing_support;

namespace {

LinearSystem general_plane() { return LinearSystem({e(1, 4) + e(2, 5), e(1, 6) + e(3, 5), e(2, 6) - e(3, 4)}); }
AlternatingForm symplectic() { return e(1, 2) + e(3, 4) + e(5, 6); }

// Cubic through four values: for span(w) the Pfaffian is c X0^3 with c read
// off from the points X0 = 1..4.
Rational cubic_coefficient_by_interpolation(const AlternatingForm& w) {
  Rational c = pfaffian(w);
  for (int x = 2; x <= 4; ++x) EXPECT_EQ(pfaffian(w * Rational(x)), c * Rational(x * x * x));
  return c;
}

}  // namespace

TEST(LinearSystem, RejectsDependentGenerators) {
  EXPECT_THROW(LinearSystem({e(1, 2), e(1, 2) * Rational(3)}), DependentGenerators);
  EXPECT_THROW(LinearSystem(std::vector<AlternatingForm>{}), DependentGenerators);
  LinearSystem a({e(1, 2), e(3, 4)});
  EXPECT_TRUE(a.contains(e(1, 2) - e(3, 4)));
  EXPECT_FALSE(a.contains(e(1, 3)));
}

TEST(PfaffianCubic, Examples) {
  EXPECT_TRUE(pfaffian_cubic(general_plane()).is_zero());
  auto cubic = pfaffian_cubic(LinearSystem({symplectic()}));
  Rational c = cubic_coefficient_by_interpolation(symplectic());
  MultiPoly<Rational> expected(1);
  expected.add_term({3}, c);
  EXPECT_EQ(cubic, expected);
  EXPECT_EQ(c, Rational(1));
  LinearSystem dim3({e(1, 4) + e(2, 5), e(1, 6) + e(3, 5), e(2, 6) - e(3, 4),
                     wedge(unit(1) - unit(5), unit(2) + unit(4))});
  EXPECT_TRUE(pfaffian_cubic(dim3).is_zero());
}

TEST(PfaffianCubic, AgreesWithPointwisePfaffian) {
  Gen g(41);
  for (int t = 0; t < 30; ++t) {
    LinearSystem a({g.form(), g.form(), g.form()});
    auto cubic = pfaffian_cubic(a);
    EXPECT_TRUE(cubic.is_zero() || cubic.homogeneous_degree() == 3);
    for (int s = 0; s < 5; ++s) {
      std::vector<Rational> x{g.rational(), g.rational(), g.rational()};
      EXPECT_EQ(cubic.eval(x), pfaffian(a.combination(x)));
    }
  }
}

TEST(PfaffianCubic, TransformsByDeterminant) {
  Gen g(42);
  for (int t = 0; t < 100; ++t) {
    LinearSystem a({g.form(), g.form()});
    GroupElement h = g.invertible();
    EXPECT_EQ(pfaffian_cubic(a.transformed(h)), pfaffian_cubic(a) * h.det());
  }
}

TEST(PfaffianCubic, VanishesOnUnstablePatterns) {
  Gen g(43);
  for (int s = 1; s <= 3; ++s)
    for (int t = 0; t < 30; ++t) {
      LinearSystem a = pattern_fill(g, static_cast<std::size_t>(g.integer(1, 5)), pattern_pairs(s, 7));
      EXPECT_TRUE(pfaffian_cubic(a).is_zero());
    }
}

TEST(GenericRank, Examples) {
  EXPECT_EQ(generic_rank(general_plane()).rank, 4);
  EXPECT_TRUE(generic_rank(general_plane()).pfaffian_vanishes);
  EXPECT_EQ(generic_rank(LinearSystem({e(1, 2)})).rank, 2);
  auto pencil = generic_rank(LinearSystem({symplectic(), e(1, 2)}));
  EXPECT_EQ(pencil.rank, 6);
  EXPECT_FALSE(pencil.pfaffian_vanishes);
}

TEST(Orthogonal, Examples) {
  std::vector<AlternatingForm> all;
  for (std::size_t k = 0; k < kPairs; ++k) {
    AlternatingForm b;
    b[k] = 1;
    all.push_back(b);
  }
  EXPECT_TRUE(orthogonal(LinearSystem(all)).empty());
  auto single = orthogonal(LinearSystem({e(1, 2)}));
  EXPECT_EQ(single.size(), 14u);
  for (const auto& b : single) EXPECT_TRUE(pairing(b, e(1, 2)).is_zero());

  LinearSystem pg = general_plane();
  auto perp = orthogonal(pg);
  ASSERT_EQ(perp.size(), 12u);
  // u1^u2, u1^u3, u2^u3 pair to zero with the plane, so they lie in the complement.
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
    BiVector b = BiVector::basis(i, j);
    for (const auto& w : pg.generators()) EXPECT_TRUE(pairing(b, w).is_zero());
    QMatrix m(perp.size() + 1, kPairs);
    for (std::size_t r = 0; r < perp.size(); ++r)
      for (std::size_t k = 0; k < kPairs; ++k) m(r, k) = perp[r].c[k];
    for (std::size_t k = 0; k < kPairs; ++k) m(perp.size(), k) = b.c[k];
    EXPECT_EQ(rank(m), perp.size());
  }
}

TEST(Orthogonal, DimensionsAddUp) {
  Gen g(44);
  for (int t = 0; t < 30; ++t) {
    std::vector<AlternatingForm> gens;
    std::size_t n = static_cast<std::size_t>(g.integer(1, 8));
    for (std::size_t k = 0; k < n; ++k) gens.push_back(g.form());
    LinearSystem a(gens);
    auto perp = orthogonal(a);
    EXPECT_EQ(perp.size() + a.size(), 15u);
    for (const auto& b : perp)
      for (const auto& w : a.generators()) EXPECT_TRUE(pairing(b, w).is_zero());
  }
}

TEST(ProjectiveEnumeration, IndexingIsABijection) {
  const std::uint32_t p = 5;
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::uint32_t> x;
  ModArith f{p};
  for (std::uint64_t i = 0; i < projective_count(3, p); ++i) {
    projective_point(i, 3, p, x);
    auto y = x;
    normalize_projective(f, y);
    EXPECT_EQ(x, y);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 31u);
}

TEST(GrIntersection, SignatureClassifier) {
  EXPECT_EQ(classify_count_signature({{5, 2}, {7, 2}}), "2-points");
  EXPECT_EQ(classify_count_signature({{5, 6}, {7, 8}}), "conic");
  EXPECT_EQ(classify_count_signature({{5, 12}, {7, 16}}), "2-lines");
  EXPECT_EQ(classify_count_signature({{5, 62}, {7, 114}}), "2-planes");
  EXPECT_EQ(classify_count_signature({{5, 0}, {7, 0}}), "empty");
  EXPECT_EQ(classify_count_signature({{5, 6}, {7, 16}}), "other");
  EXPECT_EQ(classify_count_signature({{5, 31}, {7, 57}}), "other");
}

TEST(GrIntersection, CountsMatchDirectEnumeration) {
  // Oracle: enumerate coefficient vectors and test rank with exact Rational
  // arithmetic on integer lifts.
  Gen g(45);
  LinearSystem a({e(1, 2), e(1, 3), e(2, 3) + e(4, 5)});
  const std::uint32_t p = 5;
  std::uint64_t direct = 0;
  std::vector<std::uint32_t> x;
  FpSystem s = reduce_forms(a.generators(), p);
  for (std::uint64_t i = 0; i < projective_count(3, p); ++i) {
    projective_point(i, 3, p, x);
    std::vector<std::vector<std::uint32_t>> rows(6, std::vector<std::uint32_t>(6, 0));
    for (std::size_t k = 0; k < kPairs; ++k) {
      std::uint32_t v = 0;
      for (std::size_t gi = 0; gi < 3; ++gi) v = (v + x[gi] * s.gens[gi][k]) % p;
      auto [r, c] = pair_at(k);
      rows[r][c] = v;
      rows[c][r] = (p - v) % p;
    }
    if (fp_rank(s.f, rows) <= 2) ++direct;
  }
  EXPECT_EQ(count_rank2_points(a, p), direct);
  EXPECT_EQ(count_rank2_points(a, p, 3), direct);
}

TEST(GrIntersection, SamplesAreExactRankTwoMembers) {
  LinearSystem a({e(1, 2), e(1, 3), e(2, 3) + e(4, 5)});
  auto rep = gr_intersection(a, {5, 7});
  EXPECT_FALSE(rep.samples.empty());
  Gen g(46);
  GroupElement h = g.invertible();
  LinearSystem moved = a.transformed(h);
  for (const auto& w : rep.samples) {
    EXPECT_EQ(form_rank(w), 2);
    EXPECT_TRUE(a.contains(w));
    EXPECT_EQ(form_rank(act(h, w)), 2);
    EXPECT_TRUE(moved.contains(act(h, w)));
  }
}

TEST(LineInPfaffian, Examples) {
  EXPECT_TRUE(line_in_pfaffian(e(1, 4) + e(2, 5), e(1, 6) + e(3, 5)));
  EXPECT_FALSE(line_in_pfaffian(symplectic(), e(1, 2)));
  EXPECT_TRUE(line_in_pfaffian(e(1, 2), e(1, 3)));
  // Pf(s w + t e12) = s^2 (s + t) by the diagonal formula.
  for (int s = -2; s <= 2; ++s)
    for (int t = -2; t <= 2; ++t)
      EXPECT_EQ(pfaffian(symplectic() * Rational(s) + e(1, 2) * Rational(t)), Rational(s * s * (s + t)));
}
