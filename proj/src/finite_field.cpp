#include "skewforms/finite_field.hpp"

#include <algorithm>

namespace skewforms {

std::uint32_t ModArith::inv(std::uint32_t a) const {
  // Fermat: a^(p-2).
  std::uint32_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FpSystem reduce_forms(const std::vector<AlternatingForm>& gens, std::uint32_t p) {
  if (p >= (1u << 16)) throw BadPrime("search primes must be below 65536");
  FpSystem s{ModArith{p}, {}};
  for (const auto& g : gens) {
    FpForm w{};
    for (std::size_t k = 0; k < kPairs; ++k) w[k] = reduce_mod(g[k], p).value();
    s.gens.push_back(w);
  }
  return s;
}

std::uint32_t fp_evaluate(const ModArith& f, const FpForm& w, const FpVec& u, const FpVec& v) {
  std::uint32_t acc = 0;
  for (std::size_t k = 0; k < kPairs; ++k) {
    if (w[k] == 0) continue;
    auto [i, j] = pair_at(k);
    std::uint32_t minor = f.sub(f.mul(u[i], v[j]), f.mul(u[j], v[i]));
    acc = f.add(acc, f.mul(w[k], minor));
  }
  return acc;
}

FpVec fp_contract(const ModArith& f, const FpForm& w, const FpVec& u) {
  FpVec out{};
  for (std::size_t k = 0; k < kPairs; ++k) {
    if (w[k] == 0) continue;
    auto [i, j] = pair_at(k);
    // omega(u, e_j) gets u_i m_ij; omega(u, e_i) gets -u_j m_ij.
    out[j] = f.add(out[j], f.mul(u[i], w[k]));
    out[i] = f.sub(out[i], f.mul(u[j], w[k]));
  }
  return out;
}

namespace {
// For each sorted quadruple ijkl, the pair positions of ij, kl, ik, jl, il, jk.
struct QuadPairs {
  std::array<std::array<std::uint8_t, 6>, kQuads> idx{};
  QuadPairs() {
    for (std::size_t q = 0; q < kQuads; ++q) {
      auto [i, j, k, l] = quad_at(q);
      idx[q] = {static_cast<std::uint8_t>(pair_index(i, j)), static_cast<std::uint8_t>(pair_index(k, l)),
                static_cast<std::uint8_t>(pair_index(i, k)), static_cast<std::uint8_t>(pair_index(j, l)),
                static_cast<std::uint8_t>(pair_index(i, l)), static_cast<std::uint8_t>(pair_index(j, k))};
    }
  }
};
}  // namespace

bool fp_rank_at_most_2(const ModArith& f, const FpForm& w) {
  static const QuadPairs table;
  for (const auto& t : table.idx) {
    std::uint64_t v = std::uint64_t{w[t[0]]} * w[t[1]] + std::uint64_t{f.p - w[t[2]]} * w[t[3]] +
                      std::uint64_t{w[t[4]]} * w[t[5]];
    if (v % f.p != 0) return false;
  }
  return true;
}

std::size_t fp_rank(const ModArith& f, std::vector<std::vector<std::uint32_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    std::uint32_t inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      std::uint32_t m = rows[i][c];
      if (m == 0) continue;
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(m, rows[r][j]));
    }
    ++r;
  }
  return r;
}

std::uint64_t projective_count(std::size_t n, std::uint32_t p) {
  std::uint64_t total = 0, pw = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total += pw;
    pw *= p;
  }
  return total;
}

void projective_point(std::uint64_t index, std::size_t n, std::uint32_t p, std::vector<std::uint32_t>& out) {
  out.assign(n, 0);
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::uint64_t block = 1;
    for (std::size_t i = lead + 1; i < n; ++i) block *= p;
    if (index < block) {
      out[lead] = 1;
      for (std::size_t i = n; i-- > lead + 1;) {
        out[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
      }
      return;
    }
    index -= block;
  }
  throw std::out_of_range("projective point index out of range");
}

void normalize_projective(const ModArith& f, std::vector<std::uint32_t>& v) {
  auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
  if (it == v.end()) return;
  std::uint32_t inv = f.inv(*it);
  for (auto& x : v) x = f.mul(x, inv);
}

std::vector<std::vector<int>> pivot_sets_colex(std::size_t k) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << kDim); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<int> s;
    for (int i = 0; i < static_cast<int>(kDim); ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(s);
  }
  // Colex: compare from the largest element down.
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

AffineSpace solve_affine(const ModArith& f, std::vector<std::vector<std::uint32_t>> aug, std::size_t nvars) {
  AffineSpace out;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nvars && r < aug.size(); ++c) {
    std::size_t piv = r;
    while (piv < aug.size() && aug[piv][c] == 0) ++piv;
    if (piv == aug.size()) continue;
    std::swap(aug[piv], aug[r]);
    std::uint32_t inv = f.inv(aug[r][c]);
    for (auto& x : aug[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < aug.size(); ++i) {
      if (i == r || aug[i][c] == 0) continue;
      std::uint32_t m = aug[i][c];
      for (std::size_t j = c; j <= nvars; ++j) aug[i][j] = f.sub(aug[i][j], f.mul(m, aug[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < aug.size(); ++i)
    if (aug[i][nvars] != 0) {
      out.empty = true;
      return out;
    }
  out.particular.assign(nvars, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) out.particular[pivots[i]] = aug[i][nvars];
  std::vector<bool> is_pivot(nvars, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t fcol = 0; fcol < nvars; ++fcol) {
    if (is_pivot[fcol]) continue;
    std::vector<std::uint32_t> d(nvars, 0);
    d[fcol] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) d[pivots[i]] = f.neg(aug[i][fcol]);
    out.directions.push_back(std::move(d));
  }
  return out;
}

std::optional<std::vector<QVec>> lift_rows(const std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p) {
  std::vector<QVec> out;
  for (const auto& r : rows) {
    QVec v;
    for (auto x : r) {
      auto q = rational_reconstruct(x, p);
      if (!q) return std::nullopt;
      v.push_back(*q);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<QVec>> lift_rows(const EchelonRows& rows, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> plain;
  for (const auto& r : rows) plain.emplace_back(r.begin(), r.end());
  return lift_rows(plain, p);
}

}  // namespace skewforms
