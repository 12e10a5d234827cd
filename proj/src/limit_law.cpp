#include "logitgof/limit_law.hpp"

#include <cmath>
#include <stdexcept>

#include "logitgof/logistic.hpp"
#include "logitgof/parallel.hpp"
#include "logitgof/rng.hpp"

namespace logitgof {

double quad_coeff(int k) {
  if (k < 2) throw std::domain_error("quad_coeff: k must be >= 2");
  const double kd = k;
  return 6.0 / (kd * (kd + 1.0));
}

double lin_coeff(int l) {
  if (l < 1) throw std::domain_error("lin_coeff: l must be >= 1");
  const double ld = l;
  return 3.0 * std::sqrt(4.0 * ld + 1.0) /
         (ld * (ld + 1.0) * (2.0 * ld - 1.0) * (2.0 * ld + 1.0));
}

SeriesSampler::SeriesSampler(std::size_t truncation) {
  if (truncation < 2) throw std::invalid_argument("series truncation must be >= 2");
  quad_.reserve(truncation - 1);
  for (std::size_t k = 2; k <= truncation; ++k) quad_.push_back(quad_coeff(static_cast<int>(k)));
  lin_.reserve(truncation / 2);
  for (std::size_t l = 1; 2 * l <= truncation; ++l) lin_.push_back(lin_coeff(static_cast<int>(l)));
}

SeriesSampler::Parts SeriesSampler::parts(std::span<const double> z) const {
  if (z.size() != truncation()) {
    throw std::invalid_argument("variate vector length must equal the truncation");
  }
  double quadratic = 0.0;
  for (std::size_t i = 0; i < quad_.size(); ++i) {
    const double zk = z[i + 1];  // Z_{i+2}
    quadratic += quad_[i] * zk * zk;
  }
  double linear = 0.0;
  for (std::size_t i = 0; i < lin_.size(); ++i) linear += lin_[i] * z[2 * i + 1];  // Z_{2(i+1)}
  return {quadratic, linear};
}

double SeriesSampler::draw_v(std::span<const double> z) const {
  const auto p = parts(z);
  const double lin = p.linear / kLogisticNu;
  return p.quadratic / kLogisticNu - lin * lin;
}

double SeriesSampler::draw(StatisticKind kind, std::span<const double> z) const {
  return kind == StatisticKind::Location ? draw_w(z) : draw_v(z);
}

void series_variates(std::uint64_t seed, std::uint64_t replication, std::span<double> z) {
  RandomStream stream(seed, static_cast<std::uint64_t>(StreamDomain::LimitSeries), replication);
  // Z_1 is drawn and kept so that z[2l-1] is literally Z_{2l}.
  for (double& v : z) v = stream.normal();
}

EmpiricalDistribution sample_limit(StatisticKind kind, const SeriesConfig& cfg,
                                   std::size_t count, unsigned workers) {
  if (count < 1) throw std::invalid_argument("sample_limit: count must be >= 1");
  const SeriesSampler sampler(cfg.truncation);
  auto draws = run_replications(count, workers, [&](std::size_t r) {
    thread_local std::vector<double> z;
    z.resize(cfg.truncation);
    series_variates(cfg.seed, r, z);
    return sampler.draw(kind, z);
  });
  return EmpiricalDistribution(std::move(draws), {kind, SampleSize::asymptotic(),
                                                  cfg.truncation, cfg.seed});
}

EmpiricalDistribution sample_limit_w(const SeriesConfig& cfg, std::size_t count,
                                     unsigned workers) {
  return sample_limit(StatisticKind::Location, cfg, count, workers);
}

EmpiricalDistribution sample_limit_v(const SeriesConfig& cfg, std::size_t count,
                                     unsigned workers) {
  return sample_limit(StatisticKind::LocationScale, cfg, count, workers);
}

double BridgeFunctionals::v() const noexcept {
  const double lin = log_moment / kLogisticNu;
  return w() / kLogisticNu - lin * lin;
}

BridgeFunctionals bridge_functionals(std::span<const double> midpoint_values) {
  const std::size_t m = midpoint_values.size();
  const double h = 1.0 / static_cast<double>(m);
  double sq = 0.0;
  double mean = 0.0;
  double logm = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double t = (static_cast<double>(i) + 0.5) * h;
    const double b = midpoint_values[i];
    sq += b * b / (t * (1.0 - t));
    mean += b;
    logm += b * (std::log(t) - std::log1p(-t));
  }
  return {6.0 * h * sq, 6.0 * h * mean, 6.0 * h * logm};
}

void bridge_midpoints(std::uint64_t seed, std::uint64_t replication, std::size_t grid,
                      std::span<double> out) {
  if (out.size() != grid) throw std::invalid_argument("bridge output length must equal grid");
  RandomStream stream(seed, static_cast<std::uint64_t>(StreamDomain::BridgePath), replication);
  const std::size_t steps = 2 * grid;
  const double sd = std::sqrt(1.0 / static_cast<double>(steps));
  // Brownian motion at the fine nodes j/(2m); odd nodes are the midpoints.
  double w = 0.0;
  for (std::size_t j = 1; j <= steps; ++j) {
    w += sd * stream.normal();
    if (j % 2 == 1) out[j / 2] = w;
  }
  const double w1 = w;
  for (std::size_t i = 0; i < grid; ++i) {
    const double t = (static_cast<double>(i) + 0.5) / static_cast<double>(grid);
    out[i] -= t * w1;
  }
}

EmpiricalDistribution sample_limit_via_bridge(StatisticKind kind, const BridgeConfig& cfg,
                                              std::size_t count, unsigned workers) {
  if (cfg.grid < 100) throw std::invalid_argument("bridge grid must have at least 100 cells");
  if (count < 1) throw std::invalid_argument("sample_limit_via_bridge: count must be >= 1");
  auto draws = run_replications(count, workers, [&](std::size_t r) {
    thread_local std::vector<double> mid;
    mid.resize(cfg.grid);
    bridge_midpoints(cfg.seed, r, cfg.grid, mid);
    const auto f = bridge_functionals(mid);
    return kind == StatisticKind::Location ? f.w() : f.v();
  });
  return EmpiricalDistribution(std::move(draws), {kind, SampleSize::asymptotic(), 0, cfg.seed});
}

}  // namespace logitgof
