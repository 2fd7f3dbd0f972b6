#include "skewforms/scroll.hpp"

#include <set>

#include "skewforms/parallel.hpp"

namespace skewforms {

namespace {

QVec bivector_vector(const BiVector& b) { return QVec(b.c.begin(), b.c.end()); }

// phi(c_a ^ c_b) for the pairs (0,1), (0,2), (1,2).
std::array<AlternatingForm, 3> phi_basis(const CDFDatum& d) {
  const auto& c = d.c.basis();
  return {cdf_form(d, c[0], c[1]), cdf_form(d, c[0], c[2]), cdf_form(d, c[1], c[2])};
}

struct RhoParts {
  AlternatingForm rho;    // x^y
  AlternatingForm image;  // f(x)^f(y)
};

RhoParts rho_parts(const ScrollDatum& z, const AlternatingForm& w) {
  auto basis = phi_basis(z.cdf);
  auto coords = LinearSystem({basis[0], basis[1], basis[2]}).coordinates(w);
  if (!coords) throw NotInPlane("form is not in the plane");
  const auto& c = z.cdf.c.basis();
  const std::pair<std::size_t, std::size_t> idx[] = {{0, 1}, {0, 2}, {1, 2}};
  RhoParts out;
  for (std::size_t k = 0; k < 3; ++k) {
    const Rational& a = (*coords)[k];
    if (a.is_zero()) continue;
    auto [i, j] = idx[k];
    out.rho += a * wedge(c[i], c[j]);
    out.image += a * wedge(z.cdf.apply(c[i]), z.cdf.apply(c[j]));
  }
  return out;
}

FpForm reduce_form(const AlternatingForm& w, std::uint32_t p) {
  FpForm out{};
  for (std::size_t k = 0; k < kPairs; ++k) out[k] = reduce_mod(w[k], p).value();
  return out;
}

FpForm combine(const ModArith& f, std::uint32_t a, const FpForm& x, std::uint32_t b, const FpForm& y, std::uint32_t c,
               const FpForm& w) {
  FpForm out{};
  for (std::size_t k = 0; k < kPairs; ++k) out[k] = f.add(f.add(f.mul(a, x[k]), f.mul(b, y[k])), f.mul(c, w[k]));
  return out;
}

void normalize(const ModArith& f, FpForm& v) {
  for (auto x : v)
    if (x != 0) {
      std::uint32_t inv = f.inv(x);
      for (auto& y : v) y = f.mul(y, inv);
      return;
    }
}

}  // namespace

ScrollDatum make_scroll(const LinearSystem& b) {
  ScrollDatum z{b, recover_cdf(b), {}, {}};
  std::vector<QVec> images;
  for (std::size_t i = 0; i < 3; ++i) images.push_back(bivector_vector(gauss_map(b[i])));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) images.push_back(bivector_vector(gauss_map(b[i] + b[j])));
  QMatrix m = QMatrix::from_rows(images, kPairs);
  rref_in_place(m);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BiVector bv;
    for (std::size_t k = 0; k < kPairs; ++k) bv.c[k] = m(r, k);
    z.gauss_span.push_back(bv);
  }
  for (const auto& v : nullspace(m)) z.lambda.push_back(AlternatingForm::from_vector(v));
  if (z.gauss_span.size() != 6 || z.lambda.size() != 9)
    throw std::logic_error("Gauss image of a general-type plane must span a 6-dimensional space");
  return z;
}

AlternatingForm rho(const ScrollDatum& z, const AlternatingForm& w) { return rho_parts(z, w).rho; }

AlternatingForm psi(const ScrollDatum& z, const AlternatingForm& w, const Rational& t0, const Rational& t1) {
  RhoParts r = rho_parts(z, w);
  return t0 * t0 * r.rho + t0 * t1 * w + t1 * t1 * r.image;
}

std::vector<FpForm> conic_fiber(const ScrollDatum& z, const AlternatingForm& w, std::uint32_t p) {
  RhoParts r = rho_parts(z, w);
  ModArith f{p};
  FpForm a = reduce_form(r.rho, p), mid = reduce_form(w, p), c = reduce_form(r.image, p);
  std::vector<FpForm> out;
  std::vector<std::uint32_t> t;
  for (std::uint64_t i = 0; i < projective_count(2, p); ++i) {
    projective_point(i, 2, p, t);
    FpForm v = combine(f, f.mul(t[0], t[0]), a, f.mul(t[0], t[1]), mid, f.mul(t[1], t[1]), c);
    normalize(f, v);
    out.push_back(v);
  }
  return out;
}

bool z_membership(const ScrollDatum& z, const AlternatingForm& theta) {
  if (theta.is_zero()) return false;
  for (const auto& b : z.gauss_span)
    if (!pairing(b, theta).is_zero()) return false;
  return wedge_square(theta).is_zero();
}

int restricted_quadric_system_dim(const std::vector<AlternatingForm>& basis) {
  const std::size_t m = basis.size();
  // Monomial X_i X_j (i <= j) in row-major order over the upper triangle.
  auto mono = [m](std::size_t i, std::size_t j) { return i * m - i * (i - 1) / 2 + (j - i); };
  const std::size_t nmono = m * (m + 1) / 2;
  QMatrix q(kQuads, nmono);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      FourVector w = wedge(basis[i], basis[j]);
      Rational factor = i == j ? Rational(1) : Rational(2);
      for (std::size_t r = 0; r < kQuads; ++r) q(r, mono(i, j)) = factor * w.c[r];
    }
  return static_cast<int>(rank(q)) - 1;
}

int restricted_quadric_system_dim(const ScrollDatum& z) { return restricted_quadric_system_dim(z.lambda); }

std::uint64_t scroll_image_count(const ScrollDatum& z, std::uint32_t p, unsigned jobs) {
  (void)jobs;  // a few hundred points; sequential is faster than threads
  ModArith f{p};
  std::array<FpForm, 3> rr, ww, ss;
  for (std::size_t k = 0; k < 3; ++k) {
    RhoParts r = rho_parts(z, z.base[k]);
    rr[k] = reduce_form(r.rho, p);
    ww[k] = reduce_form(z.base[k], p);
    ss[k] = reduce_form(r.image, p);
  }
  auto apply = [&](const std::array<FpForm, 3>& cols, const std::vector<std::uint32_t>& x) {
    return combine(f, x[0], cols[0], x[1], cols[1], x[2], cols[2]);
  };
  std::set<FpForm> seen;
  std::vector<std::uint32_t> x, t;
  for (std::uint64_t i = 0; i < projective_count(3, p); ++i) {
    projective_point(i, 3, p, x);
    FpForm a = apply(rr, x), mid = apply(ww, x), c = apply(ss, x);
    for (std::uint64_t j = 0; j < projective_count(2, p); ++j) {
      projective_point(j, 2, p, t);
      FpForm v = combine(f, f.mul(t[0], t[0]), a, f.mul(t[0], t[1]), mid, f.mul(t[1], t[1]), c);
      normalize(f, v);
      seen.insert(v);
    }
  }
  return seen.size();
}

std::uint64_t lambda_grassmannian_count(const ScrollDatum& z, std::uint32_t p, unsigned jobs) {
  ModArith f{p};
  const std::size_t m = z.lambda.size();
  std::vector<FpForm> basis;
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& w : z.lambda) {
    mpz_class lcm = 1;
    for (const auto& c : w.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    FpForm v = reduce_form(w * Rational(lcm), p);
    basis.push_back(v);
    rows.emplace_back(v.begin(), v.end());
  }
  if (fp_rank(f, rows) != m) throw BadPrime("the span of the forms drops dimension mod p");
  const std::uint64_t total = projective_count(m, p);
  const std::uint64_t chunk = 1 << 14;
  const std::size_t nchunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
  return parallel_sum<std::uint64_t>(nchunks, jobs, [&](std::size_t ci) {
    std::uint64_t count = 0;
    std::vector<std::uint32_t> x;
    const std::uint64_t end = std::min<std::uint64_t>(total, (ci + 1) * chunk);
    for (std::uint64_t i = ci * chunk; i < end; ++i) {
      projective_point(i, m, p, x);
      FpForm v{};
      for (std::size_t k = 0; k < m; ++k) {
        if (x[k] == 0) continue;
        for (std::size_t r = 0; r < kPairs; ++r) v[r] = f.add(v[r], f.mul(x[k], basis[k][r]));
      }
      if (fp_rank_at_most_2(f, v)) ++count;
    }
    return count;
  });
}

}  // namespace skewforms
