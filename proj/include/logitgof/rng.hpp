#pragma once

// Replication-indexed random streams.
//
// Every Monte Carlo replication owns its own engine, seeded from the triple
// (master seed, domain, replication index) through a SplitMix64 chain. A
// replication can therefore be regenerated in isolation, and the output of a
// parallel run never depends on how replications were assigned to workers.

#include <cstddef>
#include <cstdint>
#include <random>

#include <boost/random/normal_distribution.hpp>

namespace logitgof {

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Separates the stream families that share a master seed.
enum class StreamDomain : std::uint64_t {
  NullSample = 1,
  LimitSeries = 2,
  BridgePath = 3,
  Alternative = 4,  // offset by the alternative's ordinal
};

constexpr std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t domain,
                                           std::uint64_t index) noexcept {
  return splitmix64(splitmix64(splitmix64(master) ^ domain) + index);
}

class RandomStream {
 public:
  RandomStream(std::uint64_t master, std::uint64_t domain, std::uint64_t index)
      : engine_(derive_stream_seed(master, domain, index)) {}

  /// Uniform on the open interval (0, 1); never returns 0 or 1.
  double uniform() noexcept {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() { return normal_(engine_); }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  boost::random::normal_distribution<double> normal_;
};

}  // namespace logitgof
