#include "skewforms/bilinear.hpp"

#include <algorithm>
#include <optional>

#include "skewforms/univariate.hpp"

namespace skewforms {

namespace {

using V2 = std::array<Rational, 2>;
using M2 = std::array<std::array<Rational, 2>, 2>;
using Row = std::array<Rational, 2>;
using PRow = std::array<UniPoly, 2>;

struct Triple {
  V2 k0, k1, k2;
};

V2 normalized(V2 v) {
  Rational lead = !v[0].is_zero() ? v[0] : v[1];
  v[0] /= lead;
  v[1] /= lead;
  return v;
}

// Nullspace of a stack of 1x2 rows: returns 0, 1 or 2 basis vectors.
std::vector<V2> null2(const std::vector<Row>& rows) {
  QMatrix m(rows.size(), 2);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m(i, 0) = rows[i][0];
    m(i, 1) = rows[i][1];
  }
  std::vector<V2> out;
  if (rows.empty()) {
    out.push_back({Rational(1), Rational(0)});
    out.push_back({Rational(0), Rational(1)});
    return out;
  }
  for (const auto& v : nullspace(m)) out.push_back({v[0], v[1]});
  return out;
}

// k^T M for each matrix.
std::vector<Row> left_rows(const V2& k, const std::vector<M2>& ms) {
  std::vector<Row> out;
  for (const auto& m : ms) out.push_back({k[0] * m[0][0] + k[1] * m[1][0], k[0] * m[0][1] + k[1] * m[1][1]});
  return out;
}

// M k for each matrix, as rows acting on the left factor.
std::vector<Row> right_rows(const V2& k, const std::vector<M2>& ms) {
  std::vector<Row> out;
  for (const auto& m : ms) out.push_back({m[0][0] * k[0] + m[0][1] * k[1], m[1][0] * k[0] + m[1][1] * k[1]});
  return out;
}

std::vector<PRow> left_rows_poly(const PRow& k, const std::vector<M2>& ms) {
  std::vector<PRow> out;
  for (const auto& m : ms)
    out.push_back({k[0] * UniPoly::constant(m[0][0]) + k[1] * UniPoly::constant(m[1][0]),
                   k[0] * UniPoly::constant(m[0][1]) + k[1] * UniPoly::constant(m[1][1])});
  return out;
}

std::vector<M2> transposed(const std::vector<M2>& ms) {
  std::vector<M2> out;
  for (const auto& m : ms) out.push_back({{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}});
  return out;
}

// Generic rank over Q(x) of a stack of polynomial rows.
int generic_rank(const std::vector<PRow>& rows) {
  bool any = false;
  for (const auto& r : rows) any = any || !r[0].is_zero() || !r[1].is_zero();
  if (!any) return 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (!(rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0]).is_zero()) return 2;
  return 1;
}

UniPoly gcd_of_minors(const std::vector<PRow>& rows) {
  UniPoly g;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) g = gcd(g, rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0]);
  return g;
}

std::vector<Rational> roots_or_throw(const UniPoly& g, const char* what) {
  if (g.is_zero()) throw PositiveDimensional(what);
  auto roots = rational_roots(g);
  if (roots.other_degree > 0) throw IrrationalSolutions(what);
  return roots.rational;
}

// Polynomial kernel vector of a generically rank-1 stack, from its first
// nonzero row, plus the polynomial whose roots are where that row vanishes.
std::pair<PRow, UniPoly> kernel_of_rank1(const std::vector<PRow>& rows) {
  for (const auto& r : rows)
    if (!r[0].is_zero() || !r[1].is_zero()) return {PRow{-r[1], r[0]}, gcd(r[0], r[1])};
  throw std::logic_error("rank-1 stack without a nonzero row");
}

std::vector<Row> evaluate_rows(const std::vector<PRow>& rows, const Rational& x) {
  std::vector<Row> out;
  for (const auto& r : rows) out.push_back({r[0].eval(x), r[1].eval(x)});
  return out;
}

V2 evaluate(const PRow& k, const Rational& x) { return {k[0].eval(x), k[1].eval(x)}; }

class Solver {
 public:
  Solver(const LineTriple& lines, const std::vector<AlternatingForm>& forms) {
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        auto& ms = pair_mats(a, b);
        for (const auto& w : forms) {
          M2 m;
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m[i][j] = evaluate(w, lines[a][i], lines[b][j]);
          ms.push_back(m);
        }
      }
  }

  std::vector<Triple> run() {
    given_k0({Rational(0), Rational(1)});
    symbolic_k0();
    return found_;
  }

 private:
  std::vector<M2>& pair_mats(int a, int b) { return a == 0 ? (b == 1 ? m01_ : m02_) : m12_; }

  void record(const V2& k0, const V2& k1, const V2& k2) {
    Triple t{normalized(k0), normalized(k1), normalized(k2)};
    for (const auto& f : found_)
      if (f.k0 == t.k0 && f.k1 == t.k1 && f.k2 == t.k2) return;
    found_.push_back(t);
  }

  // Solutions (k1, k2) with k1 in span(s1), k2 in span(s2) and the (1,2)
  // conditions.
  void pairs(const V2& k0, const std::vector<V2>& s1, const std::vector<V2>& s2) {
    if (s1.empty() || s2.empty()) return;
    if (s1.size() == 1 && s2.size() == 1) {
      for (const auto& r : left_rows(s1[0], m12_))
        if (!(r[0] * s2[0][0] + r[1] * s2[0][1]).is_zero()) return;
      record(k0, s1[0], s2[0]);
      return;
    }
    if (s1.size() == 1) {
      auto k2 = null2(left_rows(s1[0], m12_));
      if (k2.size() == 2) throw PositiveDimensional("a whole line of solutions");
      if (k2.size() == 1) record(k0, s1[0], k2[0]);
      return;
    }
    if (s2.size() == 1) {
      auto k1 = null2(right_rows(s2[0], m12_));
      if (k1.size() == 2) throw PositiveDimensional("a whole line of solutions");
      if (k1.size() == 1) record(k0, k1[0], s2[0]);
      return;
    }
    // Both free: a bilinear system on P^1 x P^1.
    V2 at_inf{Rational(0), Rational(1)};
    auto k2 = null2(left_rows(at_inf, m12_));
    if (k2.size() == 2) throw PositiveDimensional("a whole line of solutions");
    if (k2.size() == 1) record(k0, at_inf, k2[0]);
    auto rows = left_rows_poly({UniPoly::constant(1), UniPoly::linear(0, 1)}, m12_);
    if (generic_rank(rows) < 2) throw PositiveDimensional("a curve of solutions");
    for (const auto& y : roots_or_throw(gcd_of_minors(rows), "degenerate bilinear system")) {
      V2 k1{Rational(1), y};
      auto sol = null2(evaluate_rows(rows, y));
      if (sol.size() == 2) throw PositiveDimensional("a whole line of solutions");
      if (sol.size() == 1) record(k0, k1, sol[0]);
    }
  }

  void given_k0(const V2& k0) { pairs(k0, null2(left_rows(k0, m01_)), null2(left_rows(k0, m02_))); }

  void symbolic_k0() {
    const PRow k0{UniPoly::constant(1), UniPoly::linear(0, 1)};
    auto l1 = left_rows_poly(k0, m01_);
    auto l2 = left_rows_poly(k0, m02_);
    int r1 = generic_rank(l1), r2 = generic_rank(l2);

    // Values of x where either stack drops rank are handled concretely.
    std::vector<Rational> special;
    auto add_special = [&](const UniPoly& g) {
      if (g.is_zero()) return;
      for (const auto& x : roots_or_throw(g, "rank drop at irrational parameter"))
        if (std::find(special.begin(), special.end(), x) == special.end()) special.push_back(x);
    };
    std::optional<std::pair<PRow, UniPoly>> ker1, ker2;
    if (r1 == 2) add_special(gcd_of_minors(l1));
    if (r1 == 1) { ker1 = kernel_of_rank1(l1); add_special(ker1->second); }
    if (r2 == 2) add_special(gcd_of_minors(l2));
    if (r2 == 1) { ker2 = kernel_of_rank1(l2); add_special(ker2->second); }
    std::sort(special.begin(), special.end());
    for (const auto& x : special) given_k0({Rational(1), x});
    auto is_special = [&](const Rational& x) {
      return std::find(special.begin(), special.end(), x) != special.end();
    };

    if (r1 == 2 || r2 == 2) return;
    if (r1 == 0 && r2 == 0) {
      std::size_t before = found_.size();
      std::vector<V2> full = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
      pairs({Rational(1), Rational(0)}, full, full);
      if (found_.size() > before) throw PositiveDimensional("first factor is unconstrained");
      return;
    }
    if (r1 == 1 && r2 == 1) {
      UniPoly g;
      for (const auto& r : left_rows_poly(ker1->first, m12_)) g = gcd(g, r[0] * ker2->first[0] + r[1] * ker2->first[1]);
      for (const auto& x : roots_or_throw(g, "curve of solutions"))
        if (!is_special(x)) record({Rational(1), x}, evaluate(ker1->first, x), evaluate(ker2->first, x));
      return;
    }
    // One of k1, k2 follows x along a line, the other is free.
    const bool first_moves = r1 == 1;
    const PRow& moving = first_moves ? ker1->first : ker2->first;
    auto rows = left_rows_poly(moving, first_moves ? m12_ : transposed(m12_));
    if (generic_rank(rows) < 2) throw PositiveDimensional("curve of solutions");
    for (const auto& x : roots_or_throw(gcd_of_minors(rows), "curve of solutions")) {
      if (is_special(x)) continue;
      auto other = null2(evaluate_rows(rows, x));
      if (other.size() == 2) throw PositiveDimensional("a whole line of solutions");
      if (other.empty()) continue;
      V2 k0{Rational(1), x};
      if (first_moves) record(k0, evaluate(moving, x), other[0]);
      else record(k0, other[0], evaluate(moving, x));
    }
  }

  std::vector<M2> m01_, m02_, m12_;
  std::vector<Triple> found_;
};

QVec combine(const std::array<QVec, 2>& basis, const V2& c) {
  QVec v(kDim);
  for (std::size_t i = 0; i < kDim; ++i) v[i] = c[0] * basis[0][i] + c[1] * basis[1][i];
  return v;
}

}  // namespace

std::vector<std::array<QVec, 3>> solve_isotropic_triples(const LineTriple& lines,
                                                         const std::vector<AlternatingForm>& forms) {
  Solver solver(lines, forms);
  std::vector<std::array<QVec, 3>> out;
  for (const auto& t : solver.run())
    out.push_back({combine(lines[0], t.k0), combine(lines[1], t.k1), combine(lines[2], t.k2)});
  return out;
}

bool subspace_less(const Subspace& a, const Subspace& b) {
  auto pivots = [](const Subspace& s) {
    std::vector<std::size_t> p;
    for (const auto& row : s.basis()) {
      std::size_t c = 0;
      while (row[c].is_zero()) ++c;
      p.push_back(c);
    }
    return p;
  };
  auto pa = pivots(a), pb = pivots(b);
  if (pa != pb) return pa < pb;
  for (std::size_t i = 0; i < a.basis().size(); ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      if (a.basis()[i][j] != b.basis()[i][j]) return a.basis()[i][j] < b.basis()[i][j];
  return false;
}

}  // namespace skewforms
