#include <gtest/gtest.h>

#include "skewforms/exterior.hpp"
#include "support.hpp"

using namespace skewforms;
using namespace testing_support;

namespace {

AlternatingForm symplectic() { return e(1, 2) + e(3, 4) + e(5, 6); }

}  // namespace

TEST(FormRank, Examples) {
  EXPECT_EQ(form_rank(e(1, 2)), 2);
  EXPECT_EQ(form_rank(e(1, 4) + e(2, 5)), 4);
  EXPECT_EQ(form_rank(symplectic()), 6);
  EXPECT_EQ(form_rank(AlternatingForm()), 0);
}

TEST(FormRank, AlwaysEvenAndInvariantUnderTheGroup) {
  Gen g(21);
  for (int t = 0; t < 200; ++t) {
    AlternatingForm w = g.form_of_rank_at_most(g.integer(0, 3));
    int r = form_rank(w);
    EXPECT_EQ(r % 2, 0);
    EXPECT_EQ(form_rank(act(g.invertible(), w)), r);
  }
}

TEST(FormKernel, Examples) {
  EXPECT_EQ(form_kernel(e(1, 4) + e(2, 5)), span_w({3, 6}));
  EXPECT_EQ(form_kernel(symplectic()).dim(), 0u);
  EXPECT_EQ(form_kernel(e(1, 2)), span_w({3, 4, 5, 6}));
}

TEST(FormKernel, OracleNullVectorsAndDimension) {
  Gen g(22);
  for (int t = 0; t < 100; ++t) {
    AlternatingForm w = g.form_of_rank_at_most(g.integer(1, 3));
    Subspace k = form_kernel(w);
    EXPECT_EQ(k.dim(), static_cast<std::size_t>(6 - form_rank(w)));
    QMatrix m = w.matrix();
    for (const auto& v : k.basis()) EXPECT_TRUE(is_zero_vector(m * v));
  }
}

TEST(Pfaffian, ConventionAnchorAndDiagonalOracle) {
  EXPECT_EQ(pfaffian(symplectic()), Rational(1));
  Gen g(23);
  for (int t = 0; t < 50; ++t) {
    Rational a = g.rational(), b = g.rational(), c = g.rational();
    AlternatingForm w = e(1, 2) * a + e(3, 4) * b + e(5, 6) * c;
    EXPECT_EQ(pfaffian(w), a * b * c);
    EXPECT_EQ(pfaffian(w) * pfaffian(w), leibniz_det(w.matrix()));
  }
}

TEST(Pfaffian, SquareIsDeterminant) {
  Gen g(24);
  for (int t = 0; t < 500; ++t) {
    AlternatingForm w = g.form();
    Rational pf = pfaffian(w);
    EXPECT_EQ(pf * pf, leibniz_det(w.matrix()));
  }
}

TEST(Pfaffian, VanishesBelowFullRank) {
  Gen g(25);
  for (int t = 0; t < 100; ++t) EXPECT_TRUE(pfaffian(g.form_of_rank_at_most(2)).is_zero());
}

TEST(Pfaffian, ScalesByDeterminantUnderTheGroup) {
  Gen g(26);
  for (int t = 0; t < 200; ++t) {
    GroupElement h = g.invertible();
    AlternatingForm w = g.form();
    EXPECT_EQ(pfaffian(act(h, w)), h.det() * pfaffian(w));
  }
}

TEST(WedgeSquare, Examples) {
  EXPECT_TRUE(wedge_square(e(1, 2)).is_zero());
  FourVector f = wedge_square(e(1, 4) + e(2, 5));
  for (std::size_t q = 0; q < kQuads; ++q) {
    Rational expected = q == quad_index(0, 1, 3, 4) ? Rational(-2) : Rational(0);
    EXPECT_EQ(f.c[q], expected);
  }
  FourVector s = wedge_square(symplectic());
  for (std::size_t q = 0; q < kQuads; ++q) {
    bool hit = q == quad_index(0, 1, 2, 3) || q == quad_index(0, 1, 4, 5) || q == quad_index(2, 3, 4, 5);
    EXPECT_EQ(s.c[q], hit ? Rational(2) : Rational(0));
  }
}

TEST(WedgeSquare, MatchesExpansionOracleAndDetectsRankTwo) {
  Gen g(27);
  for (int t = 0; t < 500; ++t) {
    AlternatingForm w = t % 2 ? g.form() : g.form_of_rank_at_most(g.integer(1, 2));
    FourVector f = wedge_square(w);
    EXPECT_EQ(f.c, wedge_square_by_expansion(w));
    EXPECT_EQ(f.is_zero(), form_rank(w) <= 2);
  }
  for (std::size_t k = 0; k < kPairs; ++k) {
    AlternatingForm b;
    b[k] = 1;
    EXPECT_TRUE(wedge_square(b).is_zero());
  }
}

TEST(GaussMap, KernelsOfPlaneGenerators) {
  EXPECT_TRUE(projectively_equal(gauss_map(e(1, 4) + e(2, 5)), BiVector::basis(2, 5)));
  EXPECT_TRUE(projectively_equal(gauss_map(e(1, 6) + e(3, 5)), BiVector::basis(1, 3)));
  EXPECT_THROW(gauss_map(symplectic()), RankError);
  EXPECT_THROW(gauss_map(e(1, 2)), RankError);
}

TEST(GaussMap, DecomposableWithPlaneEqualToKernel) {
  Gen g(28);
  for (int t = 0; t < 200; ++t) {
    AlternatingForm w = g.form_of_rank_at_most(2);
    if (form_rank(w) != 4) continue;
    BiVector b = gauss_map(w);
    EXPECT_TRUE(wedge(b, b).is_zero());
    Subspace k = form_kernel(w);
    EXPECT_TRUE(projectively_equal(b, wedge_vectors(k.basis()[0], k.basis()[1])));
  }
}

TEST(GaussMap, EquivariantUpToScale) {
  Gen g(29);
  for (int t = 0; t < 50; ++t) {
    AlternatingForm w = g.form_of_rank_at_most(2);
    if (form_rank(w) != 4) continue;
    GroupElement h = g.invertible();
    Subspace moved = transport(h, form_kernel(w));
    EXPECT_TRUE(projectively_equal(gauss_map(act(h, w)), wedge_vectors(moved.basis()[0], moved.basis()[1])));
  }
}

TEST(Act, Examples) {
  Gen g(30);
  AlternatingForm w = g.form();
  EXPECT_EQ(act(GroupElement::identity(), w), w);
  // diag(t^l) scales e_i^e_j by t^(l_i + l_j); take t = 2.
  const int lambda[6] = {3, 1, 0, -1, -1, -2};
  QMatrix d(kDim, kDim);
  for (std::size_t i = 0; i < kDim; ++i) d(i, i) = lambda[i] >= 0 ? Rational(1 << lambda[i]) : Rational(mpz_class(1), mpz_class(1 << -lambda[i]));
  AlternatingForm moved = act(GroupElement(d), w);
  for (std::size_t k = 0; k < kPairs; ++k) {
    auto [i, j] = pair_at(k);
    int s = lambda[i] + lambda[j];
    Rational scale = s >= 0 ? Rational(1 << s) : Rational(mpz_class(1), mpz_class(1 << -s));
    EXPECT_EQ(moved[k], w[k] * scale);
  }
  QMatrix swap = QMatrix::identity(kDim);
  swap(0, 0) = 0; swap(1, 1) = 0; swap(0, 1) = 1; swap(1, 0) = 1;
  EXPECT_EQ(act(GroupElement(swap), e(1, 2)), -e(1, 2));
  EXPECT_THROW(GroupElement(QMatrix(kDim, kDim)), std::domain_error);
}

TEST(Act, TransportPreservesIsotropy) {
  Gen g(31);
  for (int t = 0; t < 50; ++t) {
    AlternatingForm w = g.form();
    GroupElement h = g.invertible();
    QVec u = g.vec(), v = g.vec();
    QMatrix ginvT = inverse(h.matrix()).transpose();
    EXPECT_EQ(evaluate(act(h, w), ginvT * u, ginvT * v), evaluate(w, u, v));
  }
}

TEST(TangentSpace, Examples) {
  TangentSpace t = gr_tangent_space(e(1, 2));
  EXPECT_TRUE(t.contains(e(1, 5)));
  EXPECT_FALSE(t.contains(e(3, 4)));
  EXPECT_TRUE(t.contains(e(1, 3) + e(2, 4)));
  EXPECT_THROW(gr_tangent_space(e(1, 4) + e(2, 5)), RankError);
}

TEST(TangentSpace, ContainsTheCurveDerivatives) {
  // d/dt (x + t a)^(y + t b) at t = 0 is x^b + a^y.
  Gen g(32);
  for (int t = 0; t < 50; ++t) {
    QVec x = g.vec(), y = g.vec(), a = g.vec(), b = g.vec();
    AlternatingForm w = wedge(x, y);
    if (form_rank(w) != 2) continue;
    EXPECT_TRUE(gr_tangent_space(w).contains(wedge(x, b) + wedge(a, y)));
  }
}

TEST(Subspace, EchelonEqualityAndOperations) {
  Subspace a = Subspace::span(Subspace::Ambient::W, {unit(1), unit(2)});
  QVec sum = unit(1);
  sum[1] = 1;
  Subspace b = Subspace::span(Subspace::Ambient::W, {sum, unit(2)});
  EXPECT_EQ(a, b);
  EXPECT_EQ((a + span_w({3})).dim(), 3u);
  EXPECT_EQ(span_w({1, 2, 3}).intersect(span_w({3, 4})), span_w({3}));
  EXPECT_EQ(span_w({1, 2}).annihilator().dim(), 4u);
  EXPECT_TRUE(span_w({1, 2, 3}).contains(span_w({2})));
}

TEST(DecomposeRankTwo, ReassemblesExactly) {
  Gen g(33);
  for (int t = 0; t < 50; ++t) {
    AlternatingForm w = wedge(g.vec(), g.vec());
    if (form_rank(w) != 2) continue;
    auto [x, y] = decompose_rank2(w);
    EXPECT_EQ(wedge(x, y), w);
  }
}
