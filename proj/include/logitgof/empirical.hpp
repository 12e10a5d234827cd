#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logitgof/quantile_stats.hpp"

namespace logitgof {

/// A finite sample size, or the n -> infinity limit.
class SampleSize {
 public:
  static SampleSize finite(std::size_t n) { return SampleSize(n); }
  static SampleSize asymptotic() { return SampleSize(std::nullopt); }

  bool is_asymptotic() const noexcept { return !n_; }
  /// Throws std::logic_error when asymptotic.
  std::size_t n() const;

  /// Decimal n, or "asymptotic".
  std::string to_string() const;
  /// Inverse of to_string; also accepts "inf". Throws std::invalid_argument.
  static SampleSize parse(const std::string& text);

  friend bool operator==(const SampleSize&, const SampleSize&) = default;

 private:
  explicit SampleSize(std::optional<std::size_t> n) : n_(n) {}
  std::optional<std::size_t> n_;
};

struct DistributionMeta {
  StatisticKind kind = StatisticKind::LocationScale;
  SampleSize size = SampleSize::asymptotic();
  std::size_t truncation = 0;  // series terms; 0 when not applicable
  std::uint64_t seed = 0;
};

/// Sorted Monte Carlo draws of a statistic.
class EmpiricalDistribution {
 public:
  /// Sorts `draws`. Throws std::invalid_argument when empty or non-finite.
  EmpiricalDistribution(std::vector<double> draws, DistributionMeta meta);

  std::span<const double> draws() const noexcept { return draws_; }
  std::size_t reps() const noexcept { return draws_.size(); }
  const DistributionMeta& meta() const noexcept { return meta_; }

  /// The ceil(p * reps)-th order statistic. Throws std::domain_error unless 0 < p < 1.
  double quantile(double p) const;
  /// Fraction of draws <= x.
  double cdf(double x) const;
  /// Fraction of draws >= x, the empirical upper-tail p-value.
  double upper_tail(double x) const;
  double mean() const;

 private:
  std::vector<double> draws_;
  DistributionMeta meta_;
};

/// Order-statistic quantile estimates at each level, in input order.
std::vector<double> estimate_quantiles(const EmpiricalDistribution& dist,
                                       std::span<const double> levels);

/// One-based rank ceil(p * count), guarded against representation error
/// such as 0.9 * 100 = 90.00000000000001.
std::size_t quantile_rank(double p, std::size_t count);

}  // namespace logitgof
