#include "skewforms/planes.hpp"

#include <algorithm>

#include "skewforms/bilinear.hpp"
#include "skewforms/stability.hpp"

namespace skewforms {

namespace {

AlternatingForm e(std::size_t i, std::size_t j) { return AlternatingForm::basis(i - 1, j - 1); }

QVec unit(std::size_t i) {
  QVec v(kDim, Rational(0));
  v[i] = 1;
  return v;
}

// Small integer coefficient vectors for picking members of a plane, the
// generators first.
std::vector<QVec> member_coefficients() {
  std::vector<QVec> out{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        QVec v{a, b, c};
        if (a == 0 && b == 0 && c == 0) continue;
        if (std::find(out.begin(), out.end(), v) != out.end()) continue;
        out.push_back(v);
      }
  return out;
}

std::vector<AlternatingForm> some_members(const LinearSystem& b) {
  std::vector<AlternatingForm> out;
  for (const auto& c : member_coefficients()) out.push_back(b.combination(c));
  return out;
}

bool pairwise_isotropic(const LinearSystem& b, const Subspace& v) {
  for (const auto& w : b.generators())
    for (const auto& x : v.basis())
      for (const auto& y : v.basis())
        if (!evaluate(w, x, y).is_zero()) return false;
  return true;
}

// Three rank-4 members whose kernels span W.
std::optional<std::array<AlternatingForm, 3>> kernel_frame(const LinearSystem& b) {
  std::vector<AlternatingForm> members;
  std::vector<Subspace> kernels;
  for (const auto& m : some_members(b)) {
    if (form_rank(m) != 4) continue;
    Subspace k = form_kernel(m);
    if (std::find(kernels.begin(), kernels.end(), k) != kernels.end()) continue;
    members.push_back(m);
    kernels.push_back(k);
    // A general plane succeeds with the first few distinct kernels.
    if (members.size() >= 12) break;
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      Subspace two = kernels[i] + kernels[j];
      if (two.dim() != 4) continue;
      for (std::size_t k = j + 1; k < members.size(); ++k)
        if ((two + kernels[k]).dim() == kDim) return std::array{members[i], members[j], members[k]};
    }
  return std::nullopt;
}

}  // namespace

std::string to_string(OrbitLabel l) {
  switch (l) {
    case OrbitLabel::general: return "general";
    case OrbitLabel::tangent: return "tangent";
    case OrbitLabel::pencil: return "pencil";
    case OrbitLabel::hyperplane: return "hyperplane";
    case OrbitLabel::not_cr4: return "not_cr4";
    case OrbitLabel::unrecognized: return "unrecognized";
  }
  return "?";
}

std::vector<AlternatingForm> normal_form_plane(OrbitLabel label) {
  switch (label) {
    case OrbitLabel::general: return pi_g_generators();
    case OrbitLabel::tangent: return {e(1, 3) + e(2, 4), e(1, 4) + e(2, 5), e(1, 5) + e(2, 6)};
    case OrbitLabel::pencil: return {e(1, 4) + e(2, 3), e(1, 5) + e(3, 4), e(1, 6) + e(2, 4)};
    case OrbitLabel::hyperplane: return {e(1, 4) + e(2, 3), e(1, 5) + e(2, 4), e(2, 5) + e(3, 4)};
    default: throw std::invalid_argument("no normal form for label " + to_string(label));
  }
}

CR4Evidence is_constant_rank4(const LinearSystem& b, const std::vector<std::uint32_t>& primes, unsigned jobs) {
  if (b.size() != 3) throw std::invalid_argument("a plane needs exactly three generators");
  CR4Evidence ev;
  ev.pfaffian_vanishes = pfaffian_cubic(b).is_zero();
  if (!ev.pfaffian_vanishes) {
    for (const auto& m : some_members(b))
      if (!pfaffian(m).is_zero()) {
        ev.counterexample = m;
        break;
      }
    ev.note = "Pfaffian cubic does not vanish; a rank-6 member exists";
    return ev;
  }
  bool all_clean = true;
  for (auto p : primes) {
    try {
      GrIntersectionReport r = gr_intersection(b, {p}, jobs);
      ev.rank2_counts[p] = r.counts[p];
      if (r.counts[p] > 0) {
        all_clean = false;
        if (!ev.counterexample && !r.samples.empty()) ev.counterexample = r.samples.front();
      }
    } catch (const BadPrime&) {
      ev.note += "prime " + std::to_string(p) + " skipped (divides a denominator); ";
    }
  }
  ev.constant_rank4 = all_clean && !ev.rank2_counts.empty();
  if (!all_clean) ev.note += "rank-2 points found over a finite field";
  else if (ev.constant_rank4) ev.note += "no rank-2 point at any searched prime";
  return ev;
}

QVec CDFDatum::apply(const QVec& x) const {
  QMatrix cm = QMatrix::from_rows(c.basis(), kDim).transpose();
  auto coords = solve(cm, x);
  if (!coords) throw std::invalid_argument("vector is not in C");
  QVec out(kDim, Rational(0));
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) {
      Rational s = (*coords)[j] * f(i, j);
      if (s.is_zero()) continue;
      for (std::size_t t = 0; t < kDim; ++t) out[t] += s * d.basis()[i][t];
    }
  return out;
}

AlternatingForm cdf_form(const CDFDatum& datum, const QVec& x, const QVec& y) {
  return wedge(x, datum.apply(y)) - wedge(y, datum.apply(x));
}

CDFDatum standard_cdf() {
  CDFDatum s;
  s.c = Subspace::span(Subspace::Ambient::WDual, {unit(0), unit(1), unit(2)});
  s.d = Subspace::span(Subspace::Ambient::WDual, {unit(3), unit(4), unit(5)});
  s.f = QMatrix(3, 3);
  s.f(1, 0) = 1;   // e1 -> e5
  s.f(0, 1) = -1;  // e2 -> -e4
  s.f(2, 2) = -1;  // e3 -> -e6
  return s;
}

CDFDatum recover_cdf(const LinearSystem& b) {
  if (b.size() != 3) throw NotGeneralType("a plane needs exactly three generators");
  auto frame = kernel_frame(b);
  if (!frame) throw NotGeneralType("kernels of rank-4 members do not span W");
  LineTriple lines;
  for (std::size_t i = 0; i < 3; ++i) {
    auto k = form_kernel((*frame)[i]).basis();
    lines[i] = {k[0], k[1]};
  }
  std::vector<Subspace> spaces;
  try {
    for (const auto& t : solve_isotropic_triples(lines, b.generators())) {
      Subspace s = Subspace::span(Subspace::Ambient::W, {t[0], t[1], t[2]});
      if (s.dim() == 3 && std::find(spaces.begin(), spaces.end(), s) == spaces.end()) spaces.push_back(s);
    }
  } catch (const PositiveDimensional&) {
    throw NotGeneralType("isotropic 3-spaces form a positive-dimensional family");
  }
  if (spaces.size() != 2)
    throw NotGeneralType("expected exactly 2 isotropic 3-spaces, found " + std::to_string(spaces.size()));
  std::sort(spaces.begin(), spaces.end(), subspace_less);

  CDFDatum out;
  out.c = spaces[1].annihilator();
  out.d = spaces[0].annihilator();
  if (out.c.intersect(out.d).dim() != 0) throw NotGeneralType("C and D meet");

  // Unknown F(i, j) at index 3i + j; phi(c_a, c_b) must be orthogonal to
  // every bivector annihilating B.
  const auto& cb = out.c.basis();
  const auto& db = out.d.basis();
  auto perp = orthogonal(b);
  std::vector<QVec> rows;
  const std::pair<std::size_t, std::size_t> idx[] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto [a, bb] : idx)
    for (const auto& beta : perp) {
      QVec row(9, Rational(0));
      for (std::size_t i = 0; i < 3; ++i) {
        row[3 * i + bb] += pairing(beta, wedge(cb[a], db[i]));
        row[3 * i + a] -= pairing(beta, wedge(cb[bb], db[i]));
      }
      rows.push_back(row);
    }
  auto ns = nullspace(QMatrix::from_rows(rows, 9));
  if (ns.size() != 1) throw NotGeneralType("the isomorphism f is not determined up to scale");
  QVec sol = ns[0];
  // Column-major first nonzero entry becomes 1.
  Rational lead;
  for (std::size_t j = 0; j < 3 && lead.is_zero(); ++j)
    for (std::size_t i = 0; i < 3 && lead.is_zero(); ++i) lead = sol[3 * i + j];
  out.f = QMatrix(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out.f(i, j) = sol[3 * i + j] / lead;
  if (determinant(out.f).is_zero()) throw NotGeneralType("f is not invertible");
  std::vector<AlternatingForm> images;
  for (auto [a, bb] : idx) images.push_back(cdf_form(out, cb[a], cb[bb]));
  try {
    if (!b.same_span(LinearSystem(images))) throw NotGeneralType("the forms x^f(y) - y^f(x) do not span B");
  } catch (const DependentGenerators&) {
    throw NotGeneralType("the forms x^f(y) - y^f(x) are dependent");
  }
  return out;
}

GroupElement normalize_general_plane(const LinearSystem& b) {
  CDFDatum datum = recover_cdf(b);
  CDFDatum std_datum = standard_cdf();
  QMatrix s(kDim, kDim), t(kDim, kDim);
  for (std::size_t j = 0; j < 3; ++j) {
    QVec x = datum.c.basis()[j];
    QVec fx = datum.apply(x);
    QVec ej = unit(j);
    QVec fej = std_datum.apply(ej);
    for (std::size_t i = 0; i < kDim; ++i) {
      s(i, j) = x[i];
      s(i, j + 3) = fx[i];
      t(i, j) = ej[i];
      t(i, j + 3) = fej[i];
    }
  }
  QMatrix g = t * inverse(s);
  // diag(1, 1/d, 1/d, 1, d, 1) preserves the normal form plane and has
  // determinant 1/d.
  Rational d = determinant(g);
  QMatrix h = QMatrix::identity(kDim);
  h(1, 1) = Rational(1) / d;
  h(2, 2) = Rational(1) / d;
  h(4, 4) = d;
  GroupElement out(h * g);
  if (!out.det().is_one()) throw std::logic_error("normalizer determinant is not 1");
  if (!b.transformed(out).same_span(LinearSystem(pi_g_generators())))
    throw std::logic_error("normalizer does not reach the normal form plane");
  return out;
}

OrbitLabel classify_cr4_plane(const LinearSystem& b, const std::vector<std::uint32_t>& primes, unsigned jobs) {
  if (b.size() != 3) throw NotCR4("a plane needs exactly three generators");
  CR4Evidence ev = is_constant_rank4(b, primes, jobs);
  if (!ev.constant_rank4) throw NotCR4("not a constant-rank-4 plane: " + ev.note);

  Subspace common = Subspace::whole(Subspace::Ambient::W);
  for (const auto& w : b.generators()) common = common.intersect(form_kernel(w));
  if (common.dim() > 0) return OrbitLabel::hyperplane;

  // A 4-dimensional isotropic V contains every kernel, so the kernel sum of
  // members lies in V; it is V once it reaches dimension 4.
  Subspace ksum = Subspace::zero(Subspace::Ambient::W);
  for (const auto& m : some_members(b)) {
    if (form_rank(m) != 4) continue;
    ksum = ksum + form_kernel(m);
    if (ksum.dim() >= 4) break;
  }
  if (ksum.dim() == 4 && pairwise_isotropic(b, ksum)) return OrbitLabel::tangent;
  if (ksum.dim() < 4) {
    for (auto p : primes) {
      try {
        if (search_s3(b, p, 4, jobs).witness) return OrbitLabel::tangent;
      } catch (const BadPrime&) {
      }
    }
    return OrbitLabel::unrecognized;
  }

  try {
    recover_cdf(b);
    return OrbitLabel::general;
  } catch (const NotGeneralType&) {
    return OrbitLabel::pencil;
  } catch (const IrrationalSolutions&) {
    return OrbitLabel::unrecognized;
  }
}

}  // namespace skewforms
