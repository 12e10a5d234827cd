#include "logitgof/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "logitgof/parallel.hpp"
#include "logitgof/rng.hpp"

namespace logitgof {

double CriticalValueTable::at(double level) const {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (std::abs(levels[i] - level) <= 1e-9) return critvals[i];
  }
  throw std::out_of_range("critical value table (" + std::string(to_string(kind)) + ", " +
                          size.to_string() + ") has no level " + std::to_string(level));
}

namespace {

std::uint64_t alternative_domain(Alternative alt) {
  return static_cast<std::uint64_t>(StreamDomain::Alternative) +
         static_cast<std::uint64_t>(alt);
}

void validate_levels(std::span<const double> levels) {
  if (levels.empty()) throw std::invalid_argument("at least one level is required");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!(levels[i] > 0.0 && levels[i] < 1.0)) {
      throw std::invalid_argument("levels must lie in (0, 1)");
    }
    if (i > 0 && !(levels[i] > levels[i - 1])) {
      throw std::invalid_argument("levels must be strictly increasing");
    }
  }
}

std::vector<double> simulate(StatisticKind kind, std::size_t n, std::size_t reps,
                             std::uint64_t seed, std::uint64_t domain, Alternative alt,
                             unsigned workers) {
  if (n < 2) throw std::invalid_argument("sample size must be >= 2");
  if (reps < 1) throw std::invalid_argument("reps must be >= 1");
  const auto table = coefficients(n);
  const double scale = static_cast<double>(n);
  return run_replications(reps, workers, [&](std::size_t r) {
    thread_local std::vector<double> x;
    x.resize(n);
    RandomStream stream(seed, domain, r);
    for (double& v : x) v = draw(alt, stream);
    std::sort(x.begin(), x.end());
    return scale * raw_statistic(kind, x, *table);
  });
}

}  // namespace

EmpiricalDistribution simulate_null_distribution(StatisticKind kind, std::size_t n,
                                                 std::size_t reps, std::uint64_t seed,
                                                 unsigned workers) {
  auto draws = simulate(kind, n, reps, seed, static_cast<std::uint64_t>(StreamDomain::NullSample),
                        Alternative::Logistic, workers);
  return EmpiricalDistribution(std::move(draws), {kind, SampleSize::finite(n), 0, seed});
}

std::vector<double> simulate_statistic(StatisticKind kind, Alternative alt, std::size_t n,
                                       std::size_t reps, std::uint64_t seed, unsigned workers) {
  return simulate(kind, n, reps, seed, alternative_domain(alt), alt, workers);
}

CriticalValueTable table_from_distribution(const EmpiricalDistribution& dist,
                                           std::span<const double> levels) {
  validate_levels(levels);
  CriticalValueTable table;
  table.kind = dist.meta().kind;
  table.size = dist.meta().size;
  table.levels.assign(levels.begin(), levels.end());
  table.critvals = estimate_quantiles(dist, levels);
  table.reps = dist.reps();
  table.truncation = dist.meta().truncation;
  table.seed = dist.meta().seed;
  return table;
}

CriticalValueTable critical_values(StatisticKind kind, SampleSize size,
                                   std::span<const double> levels, std::size_t reps,
                                   std::size_t truncation, std::uint64_t seed,
                                   unsigned workers) {
  validate_levels(levels);
  if (size.is_asymptotic()) {
    return table_from_distribution(sample_limit(kind, {truncation, seed}, reps, workers), levels);
  }
  return table_from_distribution(simulate_null_distribution(kind, size.n(), reps, seed, workers),
                                 levels);
}

PowerResult empirical_power(StatisticKind kind, Alternative alt, std::size_t n, double alpha,
                            const CriticalValueTable& table, std::size_t reps,
                            std::uint64_t seed, unsigned workers) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (table.kind != kind) {
    throw std::invalid_argument("critical value table is for a different statistic kind");
  }
  if (!table.size.is_asymptotic() && table.size.n() != n) {
    throw std::invalid_argument("critical value table is for n = " + table.size.to_string() +
                                ", not n = " + std::to_string(n));
  }
  const double critical = table.at(1.0 - alpha);
  const auto stats = simulate_statistic(kind, alt, n, reps, seed, workers);
  const auto rejections = static_cast<std::size_t>(
      std::count_if(stats.begin(), stats.end(), [critical](double s) { return s > critical; }));

  PowerResult result;
  result.kind = kind;
  result.alternative = alt;
  result.n = n;
  result.alpha = alpha;
  result.critical_value = critical;
  result.rejections = rejections;
  result.reps = reps;
  result.power = static_cast<double>(rejections) / static_cast<double>(reps);
  result.seed = seed;
  return result;
}

}  // namespace logitgof
