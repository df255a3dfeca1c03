#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace gjts {

/// Worker cap for tuple scans. PEIRCE_THREADS (positive integer) overrides
/// the hardware default; anything else falls back to the default.
int thread_budget();

/// Scans indices [0, total) with per-thread checkers and returns the smallest
/// index whose check fails, independent of scheduling. `make_checker()` is
/// invoked once per worker and must yield a callable bool(uint64_t) returning
/// true on pass. Workers own disjoint ascending ranges, so the first failure
/// inside a range is that range's minimum; the global minimum survives the
/// merge.
template <typename MakeChecker>
std::optional<std::uint64_t> find_first_failure(std::uint64_t total, MakeChecker&& make_checker) {
  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  int workers = thread_budget();
  if (total < 4096 || workers <= 1) {
    auto check = make_checker();
    for (std::uint64_t i = 0; i < total; ++i)
      if (!check(i)) return i;
    return std::nullopt;
  }
  if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<int>(total);
  std::atomic<std::uint64_t> best{kNone};
  auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
    auto check = make_checker();
    for (std::uint64_t i = lo; i < hi; ++i) {
      if ((i & 1023) == 0 && best.load(std::memory_order_relaxed) < lo) return;
      if (!check(i)) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
        }
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(workers));
  std::uint64_t chunk = total / static_cast<std::uint64_t>(workers);
  std::uint64_t rem = total % static_cast<std::uint64_t>(workers);
  std::uint64_t start = 0;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t len = chunk + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
    threads.emplace_back(worker, start, start + len);
    start += len;
  }
  for (std::thread& t : threads) t.join();
  std::uint64_t found = best.load();
  if (found == kNone) return std::nullopt;
  return found;
}

}  // namespace gjts
