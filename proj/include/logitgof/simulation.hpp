#pragma once

// Monte Carlo orchestration: null distributions of nW_n / nV_n, critical
// value tables and empirical power against the alternatives.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "logitgof/alternatives.hpp"
#include "logitgof/empirical.hpp"
#include "logitgof/limit_law.hpp"
#include "logitgof/quantile_stats.hpp"

namespace logitgof {

inline constexpr std::array<double, 4> kStandardLevels = {0.85, 0.90, 0.95, 0.99};

struct CriticalValueTable {
  StatisticKind kind = StatisticKind::LocationScale;
  SampleSize size = SampleSize::asymptotic();
  std::vector<double> levels;
  std::vector<double> critvals;
  std::size_t reps = 0;
  std::size_t truncation = 0;  // 0 for finite sizes
  std::uint64_t seed = 0;

  /// Critical value at `level` (matched to 1e-9). Throws std::out_of_range.
  double at(double level) const;
  bool operator==(const CriticalValueTable&) const = default;
};

struct PowerResult {
  StatisticKind kind = StatisticKind::LocationScale;
  Alternative alternative = Alternative::Logistic;
  std::size_t n = 0;
  double alpha = 0.0;
  double critical_value = 0.0;
  double power = 0.0;
  std::size_t rejections = 0;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
};

/// reps draws of n * W_n or n * V_n from standard logistic samples of size n.
/// Replication r uses stream (seed, NullSample, r).
EmpiricalDistribution simulate_null_distribution(StatisticKind kind, std::size_t n,
                                                 std::size_t reps, std::uint64_t seed,
                                                 unsigned workers = 0);

/// Statistic draws under `alt`. Replication r uses stream
/// (seed, Alternative + ordinal(alt), r), disjoint from the null streams.
std::vector<double> simulate_statistic(StatisticKind kind, Alternative alt, std::size_t n,
                                       std::size_t reps, std::uint64_t seed,
                                       unsigned workers = 0);

/// Finite sizes simulate the null distribution; the asymptotic size samples
/// the series form truncated at `truncation` terms. Levels must be sorted and
/// lie in (0, 1).
CriticalValueTable critical_values(StatisticKind kind, SampleSize size,
                                   std::span<const double> levels, std::size_t reps,
                                   std::size_t truncation, std::uint64_t seed,
                                   unsigned workers = 0);

/// Table for levels from an existing distribution.
CriticalValueTable table_from_distribution(const EmpiricalDistribution& dist,
                                           std::span<const double> levels);

/// Fraction of replications with statistic > critical value at level 1 - alpha.
/// The table must match `kind` and either n or the asymptotic size.
PowerResult empirical_power(StatisticKind kind, Alternative alt, std::size_t n, double alpha,
                            const CriticalValueTable& table, std::size_t reps,
                            std::uint64_t seed, unsigned workers = 0);

}  // namespace logitgof
