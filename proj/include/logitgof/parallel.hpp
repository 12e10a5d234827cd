#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace logitgof {

/// Worker count used when a caller passes 0.
inline unsigned default_workers() noexcept {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

/// Evaluates fn(r) for r in [0, count) and stores the result at index r.
/// Replications are split into contiguous blocks, one per worker; the
/// returned vector is identical for every worker count.
template <typename Fn>
std::vector<double> run_replications(std::size_t count, unsigned workers, Fn&& fn) {
  std::vector<double> out(count);
  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1)));

  if (workers == 1) {
    for (std::size_t r = 0; r < count; ++r) out[r] = fn(r);
    return out;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t block = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = w * block;
      const std::size_t end = std::min(count, begin + block);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        try {
          for (std::size_t r = begin; r < end; ++r) out[r] = fn(r);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace logitgof
