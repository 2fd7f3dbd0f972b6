#include "skewforms/linsys.hpp"

#include <algorithm>
#include <random>

#include "skewforms/finite_field.hpp"
#include "skewforms/parallel.hpp"

namespace skewforms {

LinearSystem::LinearSystem(std::vector<AlternatingForm> generators) : gens_(std::move(generators)) {
  if (gens_.empty() || gens_.size() > kPairs)
    throw DependentGenerators("a linear system needs between 1 and 15 generators");
  if (rank(generator_matrix()) != gens_.size()) throw DependentGenerators("generators are linearly dependent");
}

QMatrix LinearSystem::generator_matrix() const {
  QMatrix m(gens_.size(), kPairs);
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t k = 0; k < kPairs; ++k) m(i, k) = gens_[i][k];
  return m;
}

AlternatingForm LinearSystem::combination(const QVec& coeffs) const {
  if (coeffs.size() != gens_.size()) throw ArityMismatch("coefficient count differs from generator count");
  AlternatingForm out;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (!coeffs[i].is_zero()) out += gens_[i] * coeffs[i];
  return out;
}

std::optional<QVec> LinearSystem::coordinates(const AlternatingForm& w) const {
  return solve(generator_matrix().transpose(), w.to_vector());
}

bool LinearSystem::contains(const LinearSystem& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const AlternatingForm& w) { return contains(w); });
}

bool LinearSystem::same_span(const LinearSystem& other) const {
  return size() == other.size() && contains(other);
}

LinearSystem LinearSystem::transformed(const GroupElement& g) const {
  std::vector<AlternatingForm> out;
  for (const auto& w : gens_) out.push_back(act(g, w));
  return LinearSystem(std::move(out));
}

std::array<std::array<MultiPoly<Rational>, kDim>, kDim> matrix_of_linear_forms(const LinearSystem& a) {
  const std::size_t n = a.size();
  std::array<std::array<MultiPoly<Rational>, kDim>, kDim> m;
  for (auto& row : m) row.fill(MultiPoly<Rational>(n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j)
        if (i != j) m[i][j] += MultiPoly<Rational>::variable(n, g, a[g].coeff(i, j));
  return m;
}

MultiPoly<Rational> pfaffian_cubic(const LinearSystem& a) {
  const std::size_t n = a.size();
  return pfaffian_of(matrix_of_linear_forms(a), MultiPoly<Rational>(n),
                     MultiPoly<Rational>::constant(n, Rational(1)));
}

GenericRankReport generic_rank(const LinearSystem& a, std::uint64_t seed, int samples) {
  GenericRankReport rep;
  rep.pfaffian_vanishes = pfaffian_cubic(a).is_zero();
  rep.samples = samples;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int s = 0; s < samples; ++s) {
    QVec c(a.size());
    for (auto& x : c) x = coef(rng);
    rep.rank = std::max(rep.rank, form_rank(a.combination(c)));
  }
  // The sampled maximum may only undershoot; the cubic settles rank 6.
  if (!rep.pfaffian_vanishes) rep.rank = 6;
  else rep.rank = std::min(rep.rank, 4);
  return rep;
}

std::vector<BiVector> orthogonal(const LinearSystem& a) {
  std::vector<BiVector> out;
  for (const auto& v : nullspace(a.generator_matrix())) {
    BiVector b;
    std::copy(v.begin(), v.end(), b.c.begin());
    out.push_back(b);
  }
  return out;
}

namespace {

FpForm combine(const FpSystem& s, const std::vector<std::uint32_t>& x) {
  FpForm w{};
  for (std::size_t g = 0; g < s.gens.size(); ++g) {
    if (x[g] == 0) continue;
    for (std::size_t k = 0; k < kPairs; ++k) w[k] = s.f.add(w[k], s.f.mul(x[g], s.gens[g][k]));
  }
  return w;
}

bool already_sampled(const std::vector<AlternatingForm>& samples, const AlternatingForm& w) {
  return std::any_of(samples.begin(), samples.end(),
                     [&](const AlternatingForm& s) { return projectively_equal(s, w); });
}

}  // namespace

std::uint64_t count_rank2_points(const LinearSystem& a, std::uint32_t p, unsigned jobs) {
  FpSystem s = reduce_forms(a.generators(), p);
  const std::size_t n = a.size();
  const std::uint64_t total = projective_count(n, p);
  // Chunk the index range so threads amortize their setup.
  const std::uint64_t chunk = 4096;
  const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
  return parallel_sum<std::uint64_t>(chunks, jobs, [&](std::size_t c) {
    std::uint64_t hits = 0;
    std::vector<std::uint32_t> x;
    for (std::uint64_t i = c * chunk; i < std::min(total, (c + 1) * chunk); ++i) {
      projective_point(i, n, p, x);
      if (fp_rank_at_most_2(s.f, combine(s, x))) ++hits;
    }
    return hits;
  });
}

std::string classify_count_signature(const std::map<std::uint32_t, std::uint64_t>& counts) {
  if (counts.empty()) return "other";
  struct Sig {
    const char* name;
    std::uint64_t (*expected)(std::uint64_t);
  };
  static const Sig sigs[] = {
      {"empty", [](std::uint64_t) -> std::uint64_t { return 0; }},
      {"2-points", [](std::uint64_t) -> std::uint64_t { return 2; }},
      {"conic", [](std::uint64_t p) { return p + 1; }},
      {"2-lines", [](std::uint64_t p) { return 2 * (p + 1); }},
      {"2-planes", [](std::uint64_t p) { return 2 * (p * p + p + 1); }},
  };
  for (const auto& sig : sigs) {
    bool all = std::all_of(counts.begin(), counts.end(),
                           [&](const auto& kv) { return kv.second == sig.expected(kv.first); });
    if (all) return sig.name;
  }
  return "other";
}

GrIntersectionReport gr_intersection(const LinearSystem& a, const std::vector<std::uint32_t>& primes, unsigned jobs) {
  GrIntersectionReport rep;
  for (auto p : primes) rep.counts[p] = count_rank2_points(a, p, jobs);
  rep.type = classify_count_signature(rep.counts);

  constexpr std::size_t kMaxSamples = 8;
  auto consider = [&](const AlternatingForm& w) {
    if (rep.samples.size() < kMaxSamples && !w.is_zero() && form_rank(w) == 2 && !already_sampled(rep.samples, w))
      rep.samples.push_back(w);
  };
  // Cheap exact candidates first: generators and their pairwise sums and
  // differences.
  for (std::size_t i = 0; i < a.size(); ++i) {
    consider(a[i]);
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      consider(a[i] + a[j]);
      consider(a[i] - a[j]);
    }
  }
  // Then lift mod-p hits at the largest prime.
  if (!primes.empty() && rep.samples.size() < kMaxSamples) {
    std::uint32_t p = *std::max_element(primes.begin(), primes.end());
    FpSystem s = reduce_forms(a.generators(), p);
    const std::uint64_t total = projective_count(a.size(), p);
    std::vector<std::uint32_t> x;
    std::size_t lifts_tried = 0;
    for (std::uint64_t i = 0; i < total && rep.samples.size() < kMaxSamples && lifts_tried < 256; ++i) {
      projective_point(i, a.size(), p, x);
      if (!fp_rank_at_most_2(s.f, combine(s, x))) continue;
      ++lifts_tried;
      if (auto lifted = lift_rows(std::vector<std::vector<std::uint32_t>>{x}, p)) consider(a.combination((*lifted)[0]));
    }
  }
  return rep;
}

bool line_in_pfaffian(const AlternatingForm& w, const AlternatingForm& w2) {
  // A binary cubic vanishing at four distinct points of P^1 is zero.
  const int pts[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  for (const auto& st : pts)
    if (!pfaffian(w * Rational(st[0]) + w2 * Rational(st[1])).is_zero()) return false;
  return true;
}

}  // namespace skewforms
