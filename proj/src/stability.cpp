#include "skewforms/stability.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "skewforms/bilinear.hpp"
#include "skewforms/finite_field.hpp"
#include "skewforms/parallel.hpp"
#include "skewforms/planes.hpp"

namespace skewforms {

OnePS::OnePS(std::array<int, kDim> weights) : w_(weights) {
  if (!std::is_sorted(w_.begin(), w_.end(), std::greater<int>()))
    throw std::invalid_argument("one-parameter subgroup weights must be non-increasing");
  if (std::accumulate(w_.begin(), w_.end(), 0) != 0) throw std::invalid_argument("weights must sum to zero");
  if (std::all_of(w_.begin(), w_.end(), [](int x) { return x == 0; }))
    throw std::invalid_argument("weights must not all vanish");
}

std::string to_string(LimitClass c) {
  switch (c) {
    case LimitClass::diverges: return "diverges";
    case LimitClass::bounded_nonzero_limit: return "bounded_nonzero_limit";
    case LimitClass::limit_zero: return "limit_zero";
  }
  return "?";
}

std::string to_string(PatternMatch m) {
  switch (m) {
    case PatternMatch::none: return "none";
    case PatternMatch::nonstable: return "nonstable";
    case PatternMatch::unstable: return "unstable";
  }
  return "?";
}

std::string to_string(Severity s) { return s == Severity::unstable ? "unstable" : "nonstable"; }

std::string to_string(StabilityTag t) {
  switch (t) {
    case StabilityTag::Stable: return "Stable";
    case StabilityTag::StrictlySemistable: return "StrictlySemistable";
    case StabilityTag::Unstable: return "Unstable";
    case StabilityTag::Unknown: return "Unknown";
  }
  return "?";
}

LimitClass one_ps_limit_class(const LinearSystem& a, const OnePS& lambda) {
  int worst = std::numeric_limits<int>::min();
  for (const auto& w : a.generators())
    for (std::size_t k = 0; k < kPairs; ++k) {
      if (w[k].is_zero()) continue;
      auto [i, j] = pair_at(k);
      worst = std::max(worst, lambda.weights()[i] + lambda.weights()[j]);
    }
  if (worst < 0) return LimitClass::limit_zero;
  if (worst == 0) return LimitClass::bounded_nonzero_limit;
  return LimitClass::diverges;
}

namespace {

bool pattern_holds(const LinearSystem& a, int s, int offset) {
  for (const auto& w : a.generators())
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < offset - s; ++j)
        if (!w[pair_index(static_cast<std::size_t>(i), static_cast<std::size_t>(j))].is_zero()) return false;
  return true;
}

}  // namespace

PatternMatch zero_pattern_check(const LinearSystem& a, const GroupElement& g, int s) {
  if (s < 1 || s > 3) throw std::invalid_argument("pattern parameter s must be 1, 2 or 3");
  LinearSystem moved = a.transformed(g);
  if (pattern_holds(moved, s, 7)) return PatternMatch::unstable;
  if (pattern_holds(moved, s, 6)) return PatternMatch::nonstable;
  return PatternMatch::none;
}

Subspace orthogonal_in_w(const LinearSystem& a, const Subspace& u) {
  std::vector<QVec> rows;
  for (const auto& w : a.generators()) {
    QMatrix m = w.matrix();
    for (const auto& v : u.basis()) rows.push_back(m.transpose() * v);  // omega(v, .) = v^T M
  }
  if (rows.empty()) return Subspace::whole(Subspace::Ambient::W);
  return Subspace::span(Subspace::Ambient::W, nullspace(QMatrix::from_rows(rows, kDim)));
}

bool verify_witness(const LinearSystem& a, const DestabilizingWitness& w) {
  if (w.s < 1 || w.s > 3) return false;
  if (w.u.ambient() != Subspace::Ambient::W || w.u_prime.ambient() != Subspace::Ambient::W) return false;
  if (w.u.dim() < static_cast<std::size_t>(w.s)) return false;
  if (!w.u_prime.contains(w.u)) return false;
  std::size_t need = static_cast<std::size_t>((w.severity == Severity::unstable ? 7 : 6) - w.s);
  if (w.u_prime.dim() < need) return false;
  for (const auto& form : a.generators())
    for (const auto& x : w.u.basis())
      for (const auto& y : w.u_prime.basis())
        if (!evaluate(form, x, y).is_zero()) return false;
  return true;
}

std::optional<DestabilizingWitness> witness_from(const LinearSystem& a, int s, const Subspace& u) {
  if (u.dim() < static_cast<std::size_t>(s)) return std::nullopt;
  Subspace up = orthogonal_in_w(a, u);
  if (!up.contains(u)) return std::nullopt;
  DestabilizingWitness w;
  w.s = s;
  w.u = u;
  w.u_prime = up;
  if (up.dim() >= static_cast<std::size_t>(7 - s)) w.severity = Severity::unstable;
  else if (up.dim() >= static_cast<std::size_t>(6 - s)) w.severity = Severity::nonstable;
  else return std::nullopt;
  return w;
}

DestabilizingWitness transport(const GroupElement& g, const DestabilizingWitness& w) {
  DestabilizingWitness out = w;
  out.u = transport(g, w.u);
  out.u_prime = transport(g, w.u_prime);
  return out;
}

namespace {

// Runs one echelon enumeration per pivot set, in parallel, and keeps the
// verified witness from the smallest pivot-set index.
template <class Constraints, class RowOk, class Exact>
SearchOutcome run_search(const LinearSystem& a, std::uint32_t p, std::size_t k, unsigned jobs,
                         Constraints constraints, RowOk row_ok, Exact exact) {
  FpSystem sys = reduce_forms(a.generators(), p);
  auto sets = pivot_sets_colex(k);
  std::vector<std::optional<DestabilizingWitness>> found(sets.size());
  std::vector<std::uint64_t> unlifted(sets.size(), 0);
  auto best = parallel_first(sets.size(), jobs, [&](std::size_t i) {
    enumerate_echelon(
        sys.f, sets[i], [&](const EchelonRows& rows, std::size_t r, std::vector<FpVec>& out) { constraints(sys, rows, r, out); },
        [&](const EchelonRows& rows, std::size_t r) { return row_ok(sys, rows, r); },
        [&](const EchelonRows& rows) {
          if (auto lifted = lift_rows(rows, p)) {
            if (auto w = exact(*lifted)) {
              found[i] = w;
              return true;
            }
          }
          ++unlifted[i];
          return false;
        });
    return found[i].has_value();
  });
  SearchOutcome out;
  out.prime = p;
  std::size_t last = best ? *best : sets.size() - 1;
  for (std::size_t i = 0; i <= last; ++i) out.unlifted_hits += unlifted[i];
  if (best) out.witness = found[*best];
  return out;
}

void isotropy_constraints(const FpSystem& sys, const EchelonRows& rows, std::size_t r, std::vector<FpVec>& out) {
  for (std::size_t q = 0; q < r; ++q)
    for (const auto& w : sys.gens) out.push_back(fp_contract(sys.f, w, rows[q]));
}

std::size_t contraction_rank(const FpSystem& sys, const EchelonRows& rows, std::size_t upto) {
  std::vector<std::vector<std::uint32_t>> m;
  for (std::size_t q = 0; q <= upto; ++q)
    for (const auto& w : sys.gens) {
      FpVec c = fp_contract(sys.f, w, rows[q]);
      m.emplace_back(c.begin(), c.end());
    }
  return fp_rank(sys.f, std::move(m));
}

Subspace span_of(const std::vector<QVec>& rows) { return Subspace::span(Subspace::Ambient::W, rows); }

}  // namespace

SearchOutcome search_s1(const LinearSystem& a, std::uint32_t p, unsigned jobs, bool unstable_only) {
  // Prefer a kernel vector, so the strongest available witness is reported.
  if (!unstable_only) {
    SearchOutcome strong = search_s1(a, p, jobs, true);
    if (strong.witness) return strong;
  }
  const std::size_t bound = unstable_only ? 0 : 1;
  return run_search(
      a, p, 1, jobs, [](const FpSystem&, const EchelonRows&, std::size_t, std::vector<FpVec>&) {},
      [&](const FpSystem& sys, const EchelonRows& rows, std::size_t) { return contraction_rank(sys, rows, 0) <= bound; },
      [&](const std::vector<QVec>& rows) -> std::optional<DestabilizingWitness> {
        auto w = witness_from(a, 1, span_of(rows));
        if (w && unstable_only && w->severity != Severity::unstable) return std::nullopt;
        return w;
      });
}

SearchOutcome search_s3(const LinearSystem& a, std::uint32_t p, int dim_u, unsigned jobs) {
  if (dim_u != 3 && dim_u != 4) throw std::invalid_argument("isotropic search dimension must be 3 or 4");
  return run_search(
      a, p, static_cast<std::size_t>(dim_u), jobs, isotropy_constraints,
      [](const FpSystem&, const EchelonRows&, std::size_t) { return true; },
      [&](const std::vector<QVec>& rows) -> std::optional<DestabilizingWitness> {
        Subspace v = span_of(rows);
        if (v.dim() != static_cast<std::size_t>(dim_u)) return std::nullopt;
        if (dim_u == 3) return witness_from(a, 3, v);
        // A 4-dimensional isotropic V: any 3-space in it has V in its orthogonal.
        std::vector<QVec> three(v.basis().begin(), v.basis().begin() + 3);
        auto w = witness_from(a, 3, span_of(three));
        if (!w || !w->u_prime.contains(v) || w->severity != Severity::unstable) return std::nullopt;
        return w;
      });
}

SearchOutcome search_s2_unstable(const LinearSystem& a, std::uint32_t p, unsigned jobs) {
  return run_search(
      a, p, 2, jobs,
      [](const FpSystem& sys, const EchelonRows& rows, std::size_t r, std::vector<FpVec>& out) {
        if (r == 1)
          for (const auto& w : sys.gens) out.push_back(fp_contract(sys.f, w, rows[0]));
      },
      [](const FpSystem& sys, const EchelonRows& rows, std::size_t r) { return contraction_rank(sys, rows, r) <= 1; },
      [&](const std::vector<QVec>& rows) -> std::optional<DestabilizingWitness> {
        auto w = witness_from(a, 2, span_of(rows));
        if (!w || w->severity != Severity::unstable) return std::nullopt;
        return w;
      });
}

std::uint64_t count_isotropic(const LinearSystem& a, std::uint32_t p, int k, unsigned jobs) {
  if (k < 1 || k > 6) throw std::invalid_argument("subspace dimension out of range");
  FpSystem sys = reduce_forms(a.generators(), p);
  auto sets = pivot_sets_colex(static_cast<std::size_t>(k));
  return parallel_sum<std::uint64_t>(sets.size(), jobs, [&](std::size_t i) {
    std::uint64_t n = 0;
    enumerate_echelon(
        sys.f, sets[i],
        [&](const EchelonRows& rows, std::size_t r, std::vector<FpVec>& out) { isotropy_constraints(sys, rows, r, out); },
        [](const EchelonRows&, std::size_t) { return true; },
        [&](const EchelonRows&) {
          ++n;
          return false;
        });
    return n;
  });
}

std::vector<AlternatingForm> pi_g_generators() {
  auto e = [](std::size_t i, std::size_t j) { return AlternatingForm::basis(i - 1, j - 1); };
  return {e(1, 4) + e(2, 5), e(1, 6) + e(3, 5), e(2, 6) - e(3, 4)};
}

bool starts_with_pi_g(const LinearSystem& a) {
  auto pg = pi_g_generators();
  if (a.size() < 3) return false;
  for (std::size_t i = 0; i < 3; ++i)
    if (a[i] != pg[i]) return false;
  return true;
}

std::vector<Subspace> isotropic3_candidates_for_pi_g(const LinearSystem& a) {
  if (!starts_with_pi_g(a)) throw PreconditionError("the first three generators must be the general normal form plane");
  LineTriple lines;
  for (std::size_t i = 0; i < 3; ++i) {
    auto k = form_kernel(a[i]).basis();
    lines[i] = {k[0], k[1]};
  }
  std::vector<Subspace> out;
  for (const auto& t : solve_isotropic_triples(lines, a.generators())) {
    Subspace s = span_of({t[0], t[1], t[2]});
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), subspace_less);
  return out;
}

StabilityVerdict decide_stability_exact(const LinearSystem& a) {
  StabilityVerdict v;
  v.exact_path = true;
  std::vector<Subspace> cands;
  try {
    cands = isotropic3_candidates_for_pi_g(a);
  } catch (const PositiveDimensional& e) {
    v.tag = StabilityTag::Unknown;
    v.evidence.push_back(std::string("isotropic 3-spaces form a positive-dimensional family: ") + e.what());
    return v;
  } catch (const IrrationalSolutions& e) {
    v.tag = StabilityTag::Unknown;
    v.evidence.push_back(std::string("isotropic 3-spaces are not defined over the rationals: ") + e.what());
    return v;
  }
  v.evidence.push_back("general plane present in normal coordinates; no s=1 pair can exist for it");
  v.evidence.push_back("isotropic 3-space candidates: " + std::to_string(cands.size()));
  if (cands.empty()) {
    v.tag = StabilityTag::Stable;
    v.semistability_certified = true;
    v.evidence.push_back("no isotropic 3-space, hence no s=2 or s=3 witness");
    return v;
  }
  std::optional<DestabilizingWitness> strongest;
  for (const auto& u : cands) {
    auto w = witness_from(a, 3, u);
    if (!w) continue;  // cannot happen for an isotropic U, kept defensive
    if (!strongest || (w->severity == Severity::unstable && strongest->severity != Severity::unstable)) strongest = w;
  }
  v.witness = strongest;
  if (strongest && strongest->severity == Severity::unstable) {
    v.tag = StabilityTag::Unstable;
    v.evidence.push_back("an isotropic 3-space has a 4-dimensional orthogonal");
  } else {
    v.tag = StabilityTag::StrictlySemistable;
    // Unstable witnesses would need an isotropic 3-space with a
    // 4-dimensional orthogonal (s=3) or infinitely many isotropic 3-spaces
    // (s=2); s=1 is excluded by the plane.
    v.semistability_certified = true;
    v.evidence.push_back("finitely many isotropic 3-spaces, none with a 4-dimensional orthogonal");
  }
  return v;
}

namespace {

// Puts the normal form plane first, then the remaining directions of A.
std::optional<LinearSystem> reorder_with_pi_g(const LinearSystem& a) {
  auto gens = pi_g_generators();
  if (!a.contains(LinearSystem(gens))) return std::nullopt;
  for (const auto& w : a.generators()) {
    if (LinearSystem(gens).contains(w)) continue;
    gens.push_back(w);
  }
  return LinearSystem(gens);
}

std::vector<QVec> candidate_plane_coefficients(const LinearSystem& a, std::uint64_t seed, int attempts) {
  const std::size_t n = a.size();
  std::vector<QVec> out;
  // Generator triples first, as three unit coefficient rows each.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t idx : {i, j, k}) {
          QVec c(n, Rational(0));
          c[idx] = 1;
          out.push_back(c);
        }
  // Random planes, alternating between {-1,0,1} and wider coefficients.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> narrow(-1, 1), wide(-3, 3);
  for (int t = 0; t < attempts; ++t)
    for (int r = 0; r < 3; ++r) {
      QVec c(n);
      for (auto& x : c) x = t % 2 == 0 ? narrow(rng) : wide(rng);
      out.push_back(c);
    }
  return out;
}

std::optional<StabilityVerdict> via_normalized_plane(const LinearSystem& a, const StabilityOptions& opts,
                                                     std::size_t& irrational_planes) {
  irrational_planes = 0;
  if (a.size() < 3) return std::nullopt;
  auto coeffs = candidate_plane_coefficients(a, opts.seed, opts.plane_attempts);
  for (std::size_t t = 0; t + 2 < coeffs.size(); t += 3) {
    std::vector<AlternatingForm> gens{a.combination(coeffs[t]), a.combination(coeffs[t + 1]),
                                      a.combination(coeffs[t + 2])};
    try {
      LinearSystem b(gens);
      if (!pfaffian_cubic(b).is_zero()) continue;
      GroupElement g = normalize_general_plane(b);
      auto moved = reorder_with_pi_g(a.transformed(g));
      if (!moved) continue;
      StabilityVerdict v = decide_stability_exact(*moved);
      if (v.tag == StabilityTag::Unknown) continue;
      if (v.witness) {
        v.witness = transport(g.inverse(), *v.witness);
        if (!verify_witness(a, *v.witness)) throw std::logic_error("transported witness failed verification");
      }
      v.evidence.insert(v.evidence.begin(), "normalized a general-type plane spanned by members of the system");
      return v;
    } catch (const DependentGenerators&) {
    } catch (const NotGeneralType&) {
    } catch (const PositiveDimensional&) {
    } catch (const IrrationalSolutions&) {
      ++irrational_planes;
    } catch (const BadPrime&) {
    }
  }
  return std::nullopt;
}

std::vector<GroupElement> coordinate_permutations() {
  std::vector<std::size_t> perm(kDim);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<GroupElement> out;
  do {
    QMatrix m(kDim, kDim);
    for (std::size_t i = 0; i < kDim; ++i) m(i, perm[i]) = 1;
    out.emplace_back(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::optional<DestabilizingWitness> witness_from_pattern(const LinearSystem& a, const GroupElement& g, int s,
                                                         PatternMatch m) {
  // In the moved coordinates U = <u_1..u_s> and U' = <u_1..u_{6-s or 7-s}>.
  std::size_t up_dim = static_cast<std::size_t>((m == PatternMatch::unstable ? 7 : 6) - s);
  std::vector<QVec> u_rows, up_rows;
  for (std::size_t i = 0; i < up_dim; ++i) {
    QVec v(kDim, Rational(0));
    v[i] = 1;
    if (i < static_cast<std::size_t>(s)) u_rows.push_back(v);
    up_rows.push_back(v);
  }
  DestabilizingWitness w;
  w.s = s;
  w.u = span_of(u_rows);
  w.u_prime = span_of(up_rows);
  w.severity = m == PatternMatch::unstable ? Severity::unstable : Severity::nonstable;
  w = transport(g.inverse(), w);
  if (!verify_witness(a, w)) return std::nullopt;
  return w;
}

}  // namespace

StabilityVerdict decide_stability(const LinearSystem& a, const StabilityOptions& opts) {
  if (starts_with_pi_g(a)) return decide_stability_exact(a);
  if (auto re = reorder_with_pi_g(a)) return decide_stability_exact(*re);
  if (opts.assume_pi_g) throw PreconditionError("system does not contain the general normal form plane");
  std::size_t irrational_planes = 0;
  if (auto v = via_normalized_plane(a, opts, irrational_planes)) return *v;

  StabilityVerdict v;
  v.evidence.push_back("no general-type plane found; using zero patterns and finite-field searches");
  if (irrational_planes)
    v.evidence.push_back(std::to_string(irrational_planes) +
                         " sampled planes have isotropic 3-spaces defined only over a quadratic extension");
  std::optional<DestabilizingWitness> nonstable;
  for (const auto& g : coordinate_permutations()) {
    for (int s = 1; s <= 3; ++s) {
      PatternMatch m = zero_pattern_check(a, g, s);
      if (m == PatternMatch::none) continue;
      auto w = witness_from_pattern(a, g, s, m);
      if (!w) continue;
      if (w->severity == Severity::unstable) {
        v.tag = StabilityTag::Unstable;
        v.witness = w;
        v.semistability_certified = true;
        v.evidence.push_back("unstable zero pattern after a coordinate permutation");
        return v;
      }
      if (!nonstable) nonstable = w;
    }
  }

  auto note = [&](const char* what, const SearchOutcome& o) {
    if (o.unlifted_hits)
      v.evidence.push_back(std::string(what) + " at p=" + std::to_string(o.prime) + ": " +
                           std::to_string(o.unlifted_hits) + " mod-p hits without a verified rational lift");
  };
  using Search = SearchOutcome (*)(const LinearSystem&, std::uint32_t, unsigned);
  const std::pair<const char*, Search> unstable_searches[] = {
      {"s=1 unstable", [](const LinearSystem& s, std::uint32_t p, unsigned j) { return search_s1(s, p, j, true); }},
      {"s=3 dim 4", [](const LinearSystem& s, std::uint32_t p, unsigned j) { return search_s3(s, p, 4, j); }},
      {"s=2 unstable", [](const LinearSystem& s, std::uint32_t p, unsigned j) { return search_s2_unstable(s, p, j); }},
  };
  const std::pair<const char*, Search> nonstable_searches[] = {
      {"s=1", [](const LinearSystem& s, std::uint32_t p, unsigned j) { return search_s1(s, p, j, false); }},
      {"s=3 dim 3", [](const LinearSystem& s, std::uint32_t p, unsigned j) { return search_s3(s, p, 3, j); }},
  };
  v.primes_searched = opts.primes;
  for (const auto& [name, fn] : unstable_searches)
    for (auto p : opts.primes) {
      SearchOutcome o = fn(a, p, opts.jobs);
      note(name, o);
      if (o.witness) {
        v.tag = StabilityTag::Unstable;
        v.witness = o.witness;
        v.semistability_certified = true;
        v.evidence.push_back(std::string(name) + " witness found at p=" + std::to_string(p) + " and verified exactly");
        return v;
      }
    }
  if (!nonstable)
    for (const auto& [name, fn] : nonstable_searches) {
      for (auto p : opts.primes) {
        SearchOutcome o = fn(a, p, opts.jobs);
        note(name, o);
        if (o.witness) {
          nonstable = o.witness;
          v.evidence.push_back(std::string(name) + " witness found at p=" + std::to_string(p) + " and verified exactly");
          break;
        }
      }
      if (nonstable) break;
    }
  if (nonstable) {
    v.tag = nonstable->severity == Severity::unstable ? StabilityTag::Unstable : StabilityTag::StrictlySemistable;
    v.witness = nonstable;
    v.semistability_certified = v.tag == StabilityTag::Unstable;
    if (v.tag == StabilityTag::StrictlySemistable)
      v.evidence.push_back("not stable; semistability not certified (no unstable witness found at the searched primes)");
    return v;
  }
  v.tag = StabilityTag::Unknown;
  v.evidence.push_back("no destabilizing witness at any searched prime; stability not certified");
  return v;
}

}  // namespace skewforms
