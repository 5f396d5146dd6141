#pragma once

// Deterministic fan-out over an index range. Work is split into contiguous
// blocks; results never depend on the thread count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace z4rds::detail {

/// True iff pred(i) holds for every i in [begin, end). Stops early (across
/// threads) on the first failure; the verdict is the same for any thread count.
template <typename Pred>
bool parallel_all_of(std::uint64_t begin, std::uint64_t end, unsigned threads, Pred pred) {
  if (begin >= end) return true;
  const std::uint64_t count = end - begin;
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, count));
  if (threads == 1) {
    for (std::uint64_t i = begin; i < end; ++i) {
      if (!pred(i)) return false;
    }
    return true;
  }
  std::atomic<bool> ok{true};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  const std::uint64_t block = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = begin + t * block;
    const std::uint64_t hi = std::min(end, lo + block);
    if (lo >= hi) break;
    pool.emplace_back([&ok, &pred, lo, hi] {
      for (std::uint64_t i = lo; i < hi && ok.load(std::memory_order_relaxed); ++i) {
        if (!pred(i)) ok.store(false, std::memory_order_relaxed);
      }
    });
  }
  pool.clear();
  return ok.load();
}

/// Runs body(lo, hi, slot) over `threads` contiguous blocks of [0, count).
/// Callers merge per-slot results in slot order.
template <typename Body>
void parallel_blocks(std::uint64_t count, unsigned threads, Body body) {
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(count, 1)));
  const std::uint64_t block = (count + threads - 1) / threads;
  if (threads == 1) {
    body(std::uint64_t{0}, count, 0u);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = t * block;
    const std::uint64_t hi = std::min(count, lo + block);
    pool.emplace_back([&body, lo, hi, t] {
      if (lo < hi) body(lo, hi, t);
    });
  }
}

}  // namespace z4rds::detail
