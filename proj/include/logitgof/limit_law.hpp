#pragma once

// Samplers for the limit laws of nW_n and nV_n.
//
// Series form, with i.i.d. standard normal Z_1, Z_2, ...:
//   W = sum_{k>=2} 6/(k(k+1)) Z_k^2
//   V = W / nu - [ (1/nu) sum_{l>=1} c_l Z_{2l} ]^2,
//   c_l = 3 sqrt(4l+1) / (l(l+1)(2l-1)(2l+1)),   nu = pi^2/3 - 2.
// The Z_{2l} in the linear sum are the even-indexed variates of the
// quadratic sum. A discretised Brownian bridge evaluation of the integral
// form is provided as an independent cross-check.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "logitgof/empirical.hpp"
#include "logitgof/quantile_stats.hpp"

namespace logitgof {

inline constexpr std::size_t kDefaultTruncation = 10000;

struct SeriesConfig {
  std::size_t truncation = kDefaultTruncation;  // K >= 2
  std::uint64_t seed = 0;
};

/// 6 / (k(k+1)); throws std::domain_error for k < 2.
double quad_coeff(int k);
/// 3 sqrt(4l+1) / (l(l+1)(2l-1)(2l+1)); throws std::domain_error for l < 1.
double lin_coeff(int l);

/// Truncated series evaluated on a caller-supplied variate vector,
/// z[i] = Z_{i+1}, K = z.size().
class SeriesSampler {
 public:
  /// Throws std::invalid_argument for truncation < 2.
  explicit SeriesSampler(std::size_t truncation);

  struct Parts {
    double quadratic;  // sum_{k=2}^{K} quad_coeff(k) Z_k^2
    double linear;     // sum_{l=1}^{K/2} lin_coeff(l) Z_{2l}
  };

  std::size_t truncation() const noexcept { return quad_.size() + 1; }
  Parts parts(std::span<const double> z) const;
  double draw_w(std::span<const double> z) const { return parts(z).quadratic; }
  double draw_v(std::span<const double> z) const;
  double draw(StatisticKind kind, std::span<const double> z) const;

 private:
  std::vector<double> quad_;  // quad_[k-2] = quad_coeff(k)
  std::vector<double> lin_;   // lin_[l-1] = lin_coeff(l)
};

/// Fills z with Z_1..Z_{z.size()} for one replication of the series sampler.
void series_variates(std::uint64_t seed, std::uint64_t replication, std::span<double> z);

/// `workers` = 0 selects the hardware concurrency; results never depend on it.
EmpiricalDistribution sample_limit_w(const SeriesConfig& cfg, std::size_t count,
                                     unsigned workers = 0);
EmpiricalDistribution sample_limit_v(const SeriesConfig& cfg, std::size_t count,
                                     unsigned workers = 0);
EmpiricalDistribution sample_limit(StatisticKind kind, const SeriesConfig& cfg,
                                   std::size_t count, unsigned workers = 0);

struct BridgeConfig {
  std::size_t grid = 2000;  // m >= 100 cells on [0, 1]
  std::uint64_t seed = 0;
};

/// Integral functionals of one bridge path, midpoint rule on m cells.
struct BridgeFunctionals {
  double weighted_square;  // int 6 B^2 / (t(1-t))
  double mean;             // int 6 B
  double log_moment;       // int 6 B ln(t/(1-t))

  double w() const noexcept { return weighted_square - mean * mean; }
  double v() const noexcept;
};

/// Evaluates the functionals from bridge values at the m cell midpoints.
BridgeFunctionals bridge_functionals(std::span<const double> midpoint_values);

/// Simulates the bridge on a 2m-step grid and returns its values at the
/// m cell midpoints (i + 1/2)/m.
void bridge_midpoints(std::uint64_t seed, std::uint64_t replication, std::size_t grid,
                      std::span<double> out);

/// Throws std::invalid_argument for grid < 100.
EmpiricalDistribution sample_limit_via_bridge(StatisticKind kind, const BridgeConfig& cfg,
                                              std::size_t count, unsigned workers = 0);

}  // namespace logitgof
