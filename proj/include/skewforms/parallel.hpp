#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace skewforms {

/// Worker count to use when the caller passes 0.
inline unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Sum of body(i) over i in [0, n), split across up to `jobs` threads.
template <class T, class Body>
T parallel_sum(std::size_t n, unsigned jobs, Body body) {
  if (jobs == 0) jobs = default_jobs();
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));
  if (jobs <= 1) {
    T acc{};
    for (std::size_t i = 0; i < n; ++i) acc += body(i);
    return acc;
  }
  std::atomic<std::size_t> next{0};
  std::vector<T> partial(jobs, T{});
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = next++; i < n; i = next++) partial[w] += body(i);
    });
  for (auto& t : pool) t.join();
  T acc{};
  for (const auto& x : partial) acc += x;
  return acc;
}

/// Smallest i in [0, n) with pred(i) true. Work items are claimed in
/// increasing order and items past the best hit so far are skipped, so the
/// answer does not depend on scheduling.
template <class Pred>
std::optional<std::size_t> parallel_first(std::size_t n, unsigned jobs, Pred pred) {
  if (jobs == 0) jobs = default_jobs();
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0}, best{kNone};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n && i < best.load(); i = next++) {
        if (!pred(i)) continue;
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    });
  for (auto& t : pool) t.join();
  if (best.load() == kNone) return std::nullopt;
  return best.load();
}

}  // namespace skewforms
