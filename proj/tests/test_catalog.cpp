#include <gtest/gtest.h>

#include "skewforms/catalog.hpp"
#include "skewforms/json_io.hpp"
#include "skewforms/scroll.hpp"
#include "support.hpp"

using namespace skewforms;
using namespace testing_support;

namespace {

std::vector<AlternatingForm> pi_g_forms() { return {e(1, 4) + e(2, 5), e(1, 6) + e(3, 5), e(2, 6) - e(3, 4)}; }

AlternatingForm wedge_sum(std::initializer_list<std::pair<int, int>> x, std::initializer_list<std::pair<int, int>> y) {
  QVec a(kDim, Rational(0)), b(kDim, Rational(0));
  for (auto [i, c] : x) a[i - 1] += c;
  for (auto [i, c] : y) b[i - 1] += c;
  return wedge(a, b);
}

// (e1 - e5)^(e2 + e4), (e1 - e5)^(e3 + e6), (e2 + e4)^(e3 + e6): the products
// with the two-term factors parenthesized, as the dimension-3, 4 and 5
// statements require.
AlternatingForm extra3() { return wedge_sum({{1, 1}, {5, -1}}, {{2, 1}, {4, 1}}); }
AlternatingForm extra4() { return wedge_sum({{1, 1}, {5, -1}}, {{3, 1}, {6, 1}}); }
AlternatingForm extra5() { return wedge_sum({{2, 1}, {4, 1}}, {{3, 1}, {6, 1}}); }

std::vector<AlternatingForm> plus(std::vector<AlternatingForm> a, std::initializer_list<AlternatingForm> extra) {
  a.insert(a.end(), extra.begin(), extra.end());
  return a;
}

using Grid = std::array<std::array<const char*, 6>, 6>;

// The appendix matrices cell by cell, as printed.
const Grid kBetaConic{{
    {"0", "0", "0", "X4", "0", "-X3"},
    {"0", "0", "-X4", "0", "X3", "0"},
    {"0", "X4", "0", "0", "X2", "-X1"},
    {"-X4", "0", "0", "0", "-X1", "X0"},
    {"0", "-X3", "-X2", "X1", "0", "0"},
    {"X3", "0", "X1", "-X0", "0", "0"},
}};
const Grid kBetaLines{{
    {"0", "X2", "-X1", "0", "0", "0"},
    {"-X2", "0", "X0", "0", "0", "0"},
    {"X1", "-X0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "X4", "-X3"},
    {"0", "0", "0", "-X4", "0", "X2"},
    {"0", "0", "0", "X3", "-X2", "0"},
}};

// Coefficient of X_var in a cell such as "-X3".
int cell_coefficient(const std::string& cell, int var) {
  if (cell == "0") return 0;
  int sign = cell[0] == '-' ? -1 : 1;
  int v = cell.back() - '0';
  return v == var ? sign : 0;
}

std::vector<AlternatingForm> grid_generators(const Grid& grid) {
  std::vector<AlternatingForm> out;
  for (int var = 0; var < 5; ++var) {
    QMatrix m(kDim, kDim);
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j) m(i, j) = cell_coefficient(grid[i][j], var);
    out.push_back(AlternatingForm::from_matrix(m));  // throws unless skew
  }
  return out;
}

std::vector<AlternatingForm> expected(const std::string& name) {
  if (name == "pi_g") return pi_g_forms();
  if (name == "pi_t") return {e(1, 3) + e(2, 4), e(1, 4) + e(2, 5), e(1, 5) + e(2, 6)};
  if (name == "pi_p") return {e(1, 4) + e(2, 3), e(1, 5) + e(3, 4), e(1, 6) + e(2, 4)};
  if (name == "pi_5") return {e(1, 4) + e(2, 3), e(1, 5) + e(2, 4), e(2, 5) + e(3, 4)};
  if (name == "thm_dim3") return plus(pi_g_forms(), {extra3()});
  if (name == "thm_dim4a") return plus(pi_g_forms(), {e(1, 2), e(4, 5)});
  if (name == "thm_dim4b") return plus(pi_g_forms(), {extra3(), extra4()});
  if (name == "thm_dim5") return plus(pi_g_forms(), {extra3(), extra4(), extra5()});
  if (name == "beta_conic") return grid_generators(kBetaConic);
  if (name == "beta_lines") return grid_generators(kBetaLines);
  throw std::logic_error("no expectation for " + name);
}

}  // namespace

TEST(Catalog, BuiltinsMatchTheWrittenFormulas) {
  EXPECT_EQ(builtin_names().size(), 10u);
  for (const auto& name : builtin_names()) {
    EXPECT_EQ(builtin(name).system.generators(), expected(name)) << name;
  }
  EXPECT_THROW(builtin("pi_x"), UnknownName);
}

TEST(Catalog, GoldenFilesMatchTheWrittenFormulas) {
  for (const auto& name : builtin_names()) {
    Json j = read_json_file(std::string(SKEWFORMS_DATA_DIR) + "/" + name + ".json");
    EXPECT_EQ(system_from_json(j).generators(), expected(name)) << name;
  }
}

TEST(Catalog, BetaTables) {
  EXPECT_EQ(beta_system(beta_matrix("beta_conic")).generators(), grid_generators(kBetaConic));
  EXPECT_EQ(beta_system(beta_matrix("beta_lines")).generators(), grid_generators(kBetaLines));
  EXPECT_THROW(beta_matrix("beta_other"), UnknownName);
}

TEST(Catalog, BetaRankLocus) {
  for (auto [name, kind, per] : {std::tuple{"beta_conic", BetaKind::conic, 20}, std::tuple{"beta_lines", BetaKind::lines, 20}}) {
    LinearSystem b = beta_system(beta_matrix(name));
    BetaRankReport r = beta_rank_locus(b, kind, 5, per, 50);
    EXPECT_TRUE(r.pfaffian_vanishes) << name;
    EXPECT_EQ(r.special_rank2, r.special_points) << name;
    EXPECT_EQ(r.generic_rank4, r.generic_points) << name;
    EXPECT_EQ(r.generic_points, 50);
  }
  // Fixed points by hand: the conic at s = 1, t = 0 and the all-ones point.
  LinearSystem conic = beta_system(beta_matrix("beta_conic"));
  EXPECT_EQ(form_rank(conic.combination({1, 0, 0, 0, 0})), 2);
  EXPECT_EQ(form_rank(conic.combination({1, 1, 1, 1, 1})), 4);
}

TEST(Catalog, BetaOrbits) {
  EXPECT_EQ(beta_orbit(beta_system(beta_matrix("beta_conic"))), BetaOrbit::conic_type);
  EXPECT_EQ(beta_orbit(beta_system(beta_matrix("beta_lines"))), BetaOrbit::two_lines_type);
  Gen g(41);
  for (int t = 0; t < 3; ++t)
    EXPECT_EQ(beta_orbit(beta_system(beta_matrix("beta_conic")).transformed(g.unimodular())), BetaOrbit::conic_type);
  EXPECT_THROW(beta_orbit(builtin("thm_dim3").system), SignatureMismatch);
}

TEST(Catalog, RandomConjugatorIsIntegralOfDeterminantOne) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    GroupElement g = random_conjugator(rng);
    EXPECT_EQ(g.det(), Rational(1));
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j) EXPECT_EQ(g.matrix()(i, j).denominator(), 1);
  }
}

TEST(Catalog, RandomPatternSystemsHaveTheirZeros) {
  std::mt19937_64 rng(6);
  for (int s = 1; s <= 3; ++s)
    for (bool unstable : {false, true}) {
      LinearSystem a = random_pattern_system(s, unstable, 4, rng);
      for (const auto& [i, j] : pattern_pairs(s, unstable ? 7 : 6))
        for (const auto& w : a.generators()) EXPECT_TRUE(w.coeff(i, j).is_zero());
    }
}

TEST(Catalog, EveryTheoremReportPasses) {
  VerifyOptions o;
  o.pattern_samples = 20;
  for (const auto& name : theorem_names()) {
    TheoremReport r = verify_theorem(name, o);
    EXPECT_TRUE(r.pass()) << name;
    for (const auto& c : r.claims) EXPECT_TRUE(c.pass) << name << ": " << c.claim << " (" << c.detail << ")";
  }
  EXPECT_THROW(verify_theorem("dim6"), UnknownName);
}

TEST(Catalog, ExtendingTheDimensionFiveSystemByScrollPoints) {
  LinearSystem a = builtin("thm_dim5").system;
  ScrollDatum z = make_scroll(LinearSystem(pi_g_forms()));
  Gen g(42);
  int extended = 0;
  for (int t = 0; t < 200; ++t) {
    AlternatingForm w = z.base.combination({g.rational(), g.rational(), g.rational()});
    Rational t0 = g.rational(), t1 = g.rational();
    if (w.is_zero() || (t0.is_zero() && t1.is_zero())) continue;
    AlternatingForm theta = psi(z, w, t0, t1);
    if (a.contains(theta)) continue;
    ++extended;
    LinearSystem bigger(plus(a.generators(), {theta}));
    if (!pfaffian_cubic(bigger).is_zero()) continue;
    EXPECT_NE(decide_stability(bigger).tag, StabilityTag::Stable) << "sample " << t;
  }
  EXPECT_GT(extended, 0);
}
