#include "skewforms/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "skewforms/planes.hpp"

namespace skewforms {

namespace {

QVec u(std::size_t i) {
  QVec v(kDim, Rational(0));
  v[i - 1] = 1;
  return v;
}

AlternatingForm e(std::size_t i, std::size_t j) { return AlternatingForm::basis(i - 1, j - 1); }

std::vector<AlternatingForm> with(std::vector<AlternatingForm> base, std::initializer_list<AlternatingForm> extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

// Representative generators beyond the normal form plane; products with
// two-term factors are read as (a)^(b).
AlternatingForm dim3_extra() { return wedge(u(1) - u(5), u(2) + u(4)); }
AlternatingForm dim4b_extra() { return wedge(u(1) - u(5), u(3) + u(6)); }
AlternatingForm dim5_extra() { return wedge(u(2) + u(4), u(3) + u(6)); }

std::string join_counts(const std::map<std::uint32_t, std::uint64_t>& counts) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : counts) {
    os << (first ? "" : ", ") << "p=" << p << ": " << c;
    first = false;
  }
  return os.str();
}

std::string describe(const DestabilizingWitness& w) {
  std::ostringstream os;
  os << "s=" << w.s << ", dim U=" << w.u.dim() << ", dim U'=" << w.u_prime.dim() << ", " << to_string(w.severity);
  return os.str();
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"pi_g",      "pi_t",      "pi_p",     "pi_5",       "thm_dim3",
          "thm_dim4a", "thm_dim4b", "thm_dim5", "beta_conic", "beta_lines"};
}

NamedSystem builtin(const std::string& name) {
  const auto pg = normal_form_plane(OrbitLabel::general);
  if (name == "pi_g") return {name, LinearSystem(pg), "StrictlySemistable", "empty", "general-type normal form plane"};
  if (name == "pi_t")
    return {name, LinearSystem(normal_form_plane(OrbitLabel::tangent)), "Unstable", "empty",
            "tangent-type normal form plane"};
  if (name == "pi_p")
    return {name, LinearSystem(normal_form_plane(OrbitLabel::pencil)), "", "empty", "pencil-type normal form plane"};
  if (name == "pi_5")
    return {name, LinearSystem(normal_form_plane(OrbitLabel::hyperplane)), "Unstable", "empty",
            "normal form plane inside the square of a hyperplane"};
  if (name == "thm_dim3")
    return {name, LinearSystem(with(pg, {dim3_extra()})), "Stable", "2-points", "stable 3-dimensional representative"};
  if (name == "thm_dim4a")
    return {name, LinearSystem(with(pg, {e(1, 2), e(4, 5)})), "Stable", "conic",
            "stable 4-dimensional representative meeting the Grassmannian in a conic"};
  if (name == "thm_dim4b")
    return {name, LinearSystem(with(pg, {dim3_extra(), dim4b_extra()})), "Stable", "2-lines",
            "stable 4-dimensional representative meeting the Grassmannian in two lines"};
  if (name == "thm_dim5")
    return {name, LinearSystem(with(pg, {dim3_extra(), dim4b_extra(), dim5_extra()})), "Stable", "2-planes",
            "stable 5-dimensional representative meeting the Grassmannian in two planes"};
  if (name == "beta_conic")
    return {name, beta_system(beta_matrix(name)), "Stable", "conic", "appendix matrix, conic case"};
  if (name == "beta_lines")
    return {name, beta_system(beta_matrix(name)), "Stable", "2-lines", "appendix matrix, two-lines case"};
  throw UnknownName("unknown builtin system: " + name);
}

BetaMatrix beta_matrix(const std::string& name) {
  // Variables are 0-based X_0..X_4; entries above the diagonal as printed.
  if (name == "beta_conic")
    return {{1, 4, 4, 1}, {1, 6, 3, -1}, {2, 3, 4, -1}, {2, 5, 3, 1},
            {3, 5, 2, 1}, {3, 6, 1, -1}, {4, 5, 1, -1}, {4, 6, 0, 1}};
  if (name == "beta_lines")
    return {{1, 2, 2, 1}, {1, 3, 1, -1}, {2, 3, 0, 1}, {4, 5, 4, 1}, {4, 6, 3, -1}, {5, 6, 2, 1}};
  throw UnknownName("unknown appendix matrix: " + name);
}

LinearSystem beta_system(const BetaMatrix& beta) {
  std::vector<AlternatingForm> gens(5);
  for (const auto& t : beta) {
    gens[static_cast<std::size_t>(t.var)] += Rational(t.sign) * e(static_cast<std::size_t>(t.i), static_cast<std::size_t>(t.j));
  }
  return LinearSystem(gens);
}

BetaRankReport beta_rank_locus(const LinearSystem& beta, BetaKind kind, std::uint64_t seed, int special_per_component,
                               int generic) {
  BetaRankReport r;
  r.pfaffian_vanishes = pfaffian_cubic(beta).is_zero();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  auto nonzero_pair = [&] {
    int a = 0, b = 0;
    while (a == 0 && b == 0) a = d(rng), b = d(rng);
    return std::pair{a, b};
  };
  auto test = [&](const QVec& x, int want, int& tested, int& ok) {
    ++tested;
    if (form_rank(beta.combination(x)) == want) ++ok;
  };
  for (int k = 0; k < special_per_component; ++k) {
    auto [s, t] = nonzero_pair();
    if (kind == BetaKind::conic) {
      test({s * s, s * t, t * t, 0, 0}, 2, r.special_points, r.special_rank2);
    } else {
      test({0, 0, 0, s, t}, 2, r.special_points, r.special_rank2);
      test({s, t, 0, 0, 0}, 2, r.special_points, r.special_rank2);
    }
  }
  auto on_locus = [&](const QVec& x) {
    if (kind == BetaKind::conic)
      return x[3].is_zero() && x[4].is_zero() && x[1] * x[1] == x[0] * x[2];
    bool l1 = x[0].is_zero() && x[1].is_zero() && x[2].is_zero();
    bool l2 = x[2].is_zero() && x[3].is_zero() && x[4].is_zero();
    return l1 || l2;
  };
  while (r.generic_points < generic) {
    QVec x(5);
    for (auto& c : x) c = d(rng);
    if (std::all_of(x.begin(), x.end(), [](const Rational& c) { return c.is_zero(); }) || on_locus(x)) continue;
    test(x, 4, r.generic_points, r.generic_rank4);
  }
  return r;
}

std::string to_string(BetaOrbit o) { return o == BetaOrbit::conic_type ? "conic-type" : "two-lines-type"; }

BetaOrbit beta_orbit(const LinearSystem& beta, const std::vector<std::uint32_t>& primes, unsigned jobs) {
  if (!pfaffian_cubic(beta).is_zero()) throw SignatureMismatch("Pfaffian does not vanish identically");
  GrIntersectionReport r = gr_intersection(beta, primes, jobs);
  if (r.type == "conic") return BetaOrbit::conic_type;
  if (r.type == "2-lines") return BetaOrbit::two_lines_type;
  throw SignatureMismatch("rank-2 count signature is " + r.type + " (" + join_counts(r.counts) + ")");
}

LinearSystem random_pattern_system(int s, bool unstable, std::size_t generators, std::mt19937_64& rng) {
  if (s < 1 || s > 3) throw std::invalid_argument("pattern parameter s must be 1, 2 or 3");
  const int bound = (unstable ? 7 : 6) - s;  // zero for 0-based i < s, i < j < bound
  std::uniform_int_distribution<int> d(-5, 5);
  while (true) {
    std::vector<AlternatingForm> gens;
    for (std::size_t g = 0; g < generators; ++g) {
      AlternatingForm w;
      for (std::size_t k = 0; k < kPairs; ++k) {
        auto [i, j] = pair_at(k);
        bool forced = static_cast<int>(i) < s && static_cast<int>(j) < bound;
        if (!forced) w[k] = d(rng);
      }
      gens.push_back(w);
    }
    try {
      return LinearSystem(gens);
    } catch (const DependentGenerators&) {
    }
  }
}

GroupElement random_conjugator(std::mt19937_64& rng, int steps) {
  std::uniform_int_distribution<int> idx(0, kDim - 1), coef(-2, 2);
  QMatrix m = QMatrix::identity(kDim);
  for (int k = 0; k < steps; ++k) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Rational c = coef(rng);
    for (std::size_t col = 0; col < kDim; ++col) m(i, col) += c * m(j, col);
  }
  std::array<std::size_t, kDim> perm{0, 1, 2, 3, 4, 5};
  std::shuffle(perm.begin(), perm.end(), rng);
  QMatrix p(kDim, kDim);
  for (std::size_t i = 0; i < kDim; ++i) p(i, perm[i]) = 1;
  GroupElement g(p * m);
  if (g.det() != Rational(1)) {
    // Flip one row so the determinant is +1.
    QMatrix fixed = g.matrix();
    for (std::size_t col = 0; col < kDim; ++col) fixed(0, col) = -fixed(0, col);
    g = GroupElement(fixed);
  }
  return g;
}

OnePS pattern_weights(int s, bool unstable) {
  if (s < 1 || s > 3) throw std::invalid_argument("pattern parameter s must be 1, 2 or 3");
  std::array<int, kDim> w{};
  for (int i = 1; i <= 6; ++i) {
    if (unstable) w[i - 1] = i <= s ? 6 - s : (i <= 7 - s ? -1 : s - 7);
    else w[i - 1] = i <= s ? 1 : (i <= 6 - s ? 0 : -1);
  }
  return OnePS(w);
}

bool TheoremReport::pass() const {
  return !claims.empty() && std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass; });
}

std::vector<std::string> theorem_names() {
  return {"dim3", "dim4a", "dim4b", "dim5", "planes", "planes_not_stable", "unstable_in_pf", "appendix"};
}

namespace {

StabilityOptions stability_options(const VerifyOptions& o) {
  StabilityOptions s;
  s.primes = o.primes;
  s.jobs = o.jobs;
  s.seed = o.seed;
  return s;
}

void claim_stable(TheoremReport& r, const LinearSystem& a, const VerifyOptions& o) {
  StabilityVerdict v = decide_stability(a, stability_options(o));
  r.claims.push_back({"stable via the exact path", v.tag == StabilityTag::Stable && v.exact_path,
                      to_string(v.tag) + (v.exact_path ? " (exact)" : " (not exact)")});
}

void claim_signature(TheoremReport& r, const LinearSystem& a, const std::string& type,
                     std::uint64_t (*expected)(std::uint64_t), const VerifyOptions& o) {
  GrIntersectionReport g = gr_intersection(a, o.primes, o.jobs);
  bool counts_ok = true;
  for (auto p : o.primes) counts_ok = counts_ok && g.counts[p] == expected(p);
  r.claims.push_back({"Grassmannian intersection is " + type, counts_ok && g.type == type,
                      g.type + " (" + join_counts(g.counts) + ")"});
}

void claim_contains_general_plane(TheoremReport& r, const LinearSystem& a, const VerifyOptions& o) {
  LinearSystem plane({a[0], a[1], a[2]});
  OrbitLabel l = classify_cr4_plane(plane, o.primes, o.jobs);
  r.claims.push_back({"contains a general-type plane", l == OrbitLabel::general, to_string(l)});
}

void claim_witness(TheoremReport& r, const std::string& what, const LinearSystem& a, bool need_unstable,
                   const VerifyOptions& o) {
  StabilityVerdict v = decide_stability(a, stability_options(o));
  bool ok = v.witness && verify_witness(a, *v.witness) &&
            (!need_unstable || v.witness->severity == Severity::unstable);
  r.claims.push_back({what + (need_unstable ? ": unstable witness" : ": nonstable witness"), ok,
                      to_string(v.tag) + (v.witness ? ", " + describe(*v.witness) : ", no witness")});
}

}  // namespace

TheoremReport verify_theorem(const std::string& name, const VerifyOptions& o) {
  TheoremReport r;
  r.name = name;
  if (name == "dim3") {
    LinearSystem a = builtin("thm_dim3").system;
    claim_contains_general_plane(r, a, o);
    claim_stable(r, a, o);
    claim_signature(r, a, "2-points", [](std::uint64_t) -> std::uint64_t { return 2; }, o);
    LinearSystem degenerate(with(normal_form_plane(OrbitLabel::general), {e(1, 2)}));
    StabilityVerdict v = decide_stability(degenerate, stability_options(o));
    Subspace expected = Subspace::span(Subspace::Ambient::W, {u(4), u(5), u(6)});
    bool ok = v.tag != StabilityTag::Stable && v.witness && v.witness->u == expected &&
              verify_witness(degenerate, *v.witness);
    r.claims.push_back({"degenerate member with e1^e2 is not stable, witness <u4,u5,u6>", ok, to_string(v.tag)});
  } else if (name == "dim4a") {
    LinearSystem a = builtin("thm_dim4a").system;
    claim_contains_general_plane(r, a, o);
    claim_stable(r, a, o);
    claim_signature(r, a, "conic", [](std::uint64_t p) { return p + 1; }, o);
  } else if (name == "dim4b") {
    LinearSystem a = builtin("thm_dim4b").system;
    claim_contains_general_plane(r, a, o);
    claim_stable(r, a, o);
    claim_signature(r, a, "2-lines", [](std::uint64_t p) { return 2 * (p + 1); }, o);
  } else if (name == "dim5") {
    LinearSystem a = builtin("thm_dim5").system;
    claim_contains_general_plane(r, a, o);
    claim_stable(r, a, o);
    claim_signature(r, a, "2-planes", [](std::uint64_t p) { return 2 * (p * p + p + 1); }, o);
  } else if (name == "planes") {
    for (auto l : {OrbitLabel::general, OrbitLabel::tangent, OrbitLabel::pencil, OrbitLabel::hyperplane}) {
      OrbitLabel got = classify_cr4_plane(LinearSystem(normal_form_plane(l)), o.primes, o.jobs);
      r.claims.push_back({"normal form " + to_string(l) + " classified", got == l, to_string(got)});
    }
  } else if (name == "planes_not_stable") {
    claim_witness(r, "tangent plane", builtin("pi_t").system, true, o);
    claim_witness(r, "hyperplane-type plane", builtin("pi_5").system, true, o);
    claim_witness(r, "pencil plane", builtin("pi_p").system, false, o);
    claim_witness(r, "general plane", builtin("pi_g").system, false, o);
  } else if (name == "unstable_in_pf") {
    std::mt19937_64 rng(o.seed);
    for (int s = 1; s <= 3; ++s) {
      int pf_ok = 0, limit_ok = 0, bounded_ok = 0;
      for (int k = 0; k < o.pattern_samples; ++k) {
        std::size_t n = 1 + rng() % 5;
        LinearSystem a = random_pattern_system(s, true, n, rng);
        if (pfaffian_cubic(a).is_zero()) ++pf_ok;
        if (one_ps_limit_class(a, pattern_weights(s, true)) == LimitClass::limit_zero) ++limit_ok;
        LinearSystem b = random_pattern_system(s, false, n, rng);
        if (one_ps_limit_class(b, pattern_weights(s, false)) != LimitClass::diverges) ++bounded_ok;
      }
      const std::string tag = "s=" + std::to_string(s);
      const std::string of = "/" + std::to_string(o.pattern_samples);
      r.claims.push_back({tag + " unstable pattern lies in the Pfaffian", pf_ok == o.pattern_samples,
                          std::to_string(pf_ok) + of});
      r.claims.push_back({tag + " unstable weights drive the system to zero", limit_ok == o.pattern_samples,
                          std::to_string(limit_ok) + of});
      r.claims.push_back({tag + " nonstable weights keep the system bounded", bounded_ok == o.pattern_samples,
                          std::to_string(bounded_ok) + of});
    }
  } else if (name == "appendix") {
    for (auto [nm, kind] : {std::pair{"beta_conic", BetaKind::conic}, std::pair{"beta_lines", BetaKind::lines}}) {
      LinearSystem b = builtin(nm).system;
      BetaRankReport rep = beta_rank_locus(b, kind, o.seed, 20, 50);
      r.claims.push_back({std::string(nm) + " Pfaffian vanishes", rep.pfaffian_vanishes, ""});
      r.claims.push_back({std::string(nm) + " rank 2 along the special locus", rep.special_rank2 == rep.special_points,
                          std::to_string(rep.special_rank2) + "/" + std::to_string(rep.special_points)});
      r.claims.push_back({std::string(nm) + " rank 4 at generic points", rep.generic_rank4 == rep.generic_points,
                          std::to_string(rep.generic_rank4) + "/" + std::to_string(rep.generic_points)});
      BetaOrbit want = kind == BetaKind::conic ? BetaOrbit::conic_type : BetaOrbit::two_lines_type;
      std::string got;
      bool ok = false;
      try {
        BetaOrbit orbit = beta_orbit(b, o.primes, o.jobs);
        got = to_string(orbit);
        ok = orbit == want;
      } catch (const SignatureMismatch& ex) {
        got = ex.what();
      }
      r.claims.push_back({std::string(nm) + " orbit is " + to_string(want), ok, got});
      StabilityVerdict v = decide_stability(b, stability_options(o));
      r.claims.push_back({std::string(nm) + " is stable", v.tag == StabilityTag::Stable,
                          to_string(v.tag) + (v.exact_path ? " (exact)" : "")});
    }
  } else {
    throw UnknownName("unknown theorem: " + name);
  }
  return r;
}

}  // namespace skewforms
