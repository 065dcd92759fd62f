#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace defset::detail {

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results keep index order.
template <class R>
std::vector<R> parallel_map(std::size_t n, unsigned jobs, const std::function<R(std::size_t)>& fn) {
  std::vector<R> out(n);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) out[i] = fn(i);
      });
    }
  }
  return out;
}

// Advances `comb` (strictly increasing indices into [0, n)) to the next
// k-combination in lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[i] == n - k + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

// Scans the k-subsets of `pool` in lexicographic order and returns the first
// one for which `probe` yields a value. Candidates are evaluated in batches
// across `jobs` threads; the earliest hit in lexicographic order always wins,
// so the answer is independent of `jobs`.
template <class R>
std::optional<std::pair<std::vector<int>, R>> first_subset_hit(
    const std::vector<int>& pool, std::size_t k, unsigned jobs,
    const std::function<std::optional<R>(const std::vector<int>&)>& probe) {
  const int n = static_cast<int>(pool.size());
  if (k > pool.size()) return std::nullopt;
  std::vector<int> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = static_cast<int>(i);
  auto subset_of = [&](const std::vector<int>& c) {
    std::vector<int> s(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) s[i] = pool[c[i]];
    return s;
  };

  if (jobs <= 1) {
    do {
      auto subset = subset_of(comb);
      if (auto hit = probe(subset)) return std::make_pair(std::move(subset), std::move(*hit));
    } while (next_combination(comb, n));
    return std::nullopt;
  }

  const std::size_t batch_size = 256 * static_cast<std::size_t>(jobs);
  bool more = true;
  while (more) {
    std::vector<std::vector<int>> batch;
    batch.reserve(batch_size);
    while (more && batch.size() < batch_size) {
      batch.push_back(subset_of(comb));
      more = next_combination(comb, n);
    }
    std::atomic<std::size_t> best{batch.size()};
    std::vector<std::optional<R>> results(batch.size());
    std::atomic<std::size_t> next{0};
    {
      std::vector<std::jthread> workers;
      for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
          for (std::size_t i = next++; i < batch.size(); i = next++) {
            if (i > best.load()) break;
            results[i] = probe(batch[i]);
            if (results[i]) {
              std::size_t cur = best.load();
              while (i < cur && !best.compare_exchange_weak(cur, i)) {
              }
            }
          }
        });
      }
    }
    const std::size_t b = best.load();
    if (b < batch.size()) return std::make_pair(std::move(batch[b]), std::move(*results[b]));
  }
  return std::nullopt;
}

}  // namespace defset::detail
