#include "logitgof/empirical.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace logitgof {

std::size_t SampleSize::n() const {
  if (!n_) throw std::logic_error("asymptotic sample size has no finite n");
  return *n_;
}

std::string SampleSize::to_string() const {
  return n_ ? std::to_string(*n_) : std::string("asymptotic");
}

SampleSize SampleSize::parse(const std::string& text) {
  if (text == "asymptotic" || text == "inf" || text == "infinity") return asymptotic();
  std::size_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 2) {
    throw std::invalid_argument("sample size must be an integer >= 2 or 'asymptotic', got '" +
                                text + "'");
  }
  return finite(value);
}

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> draws, DistributionMeta meta)
    : draws_(std::move(draws)), meta_(meta) {
  if (draws_.empty()) throw std::invalid_argument("empirical distribution needs at least one draw");
  for (double x : draws_) {
    if (!std::isfinite(x)) throw std::invalid_argument("empirical distribution has a non-finite draw");
  }
  std::sort(draws_.begin(), draws_.end());
}

std::size_t quantile_rank(double p, std::size_t count) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("quantile level must lie in (0, 1)");
  }
  const double scaled = p * static_cast<double>(count);
  auto rank = static_cast<std::size_t>(std::ceil(scaled - 1e-9 * std::max(1.0, scaled)));
  return std::clamp<std::size_t>(rank, 1, count);
}

double EmpiricalDistribution::quantile(double p) const {
  return draws_[quantile_rank(p, draws_.size()) - 1];
}

double EmpiricalDistribution::cdf(double x) const {
  const auto it = std::upper_bound(draws_.begin(), draws_.end(), x);
  return static_cast<double>(it - draws_.begin()) / static_cast<double>(draws_.size());
}

double EmpiricalDistribution::upper_tail(double x) const {
  const auto it = std::lower_bound(draws_.begin(), draws_.end(), x);
  return static_cast<double>(draws_.end() - it) / static_cast<double>(draws_.size());
}

double EmpiricalDistribution::mean() const {
  return std::accumulate(draws_.begin(), draws_.end(), 0.0) / static_cast<double>(draws_.size());
}

std::vector<double> estimate_quantiles(const EmpiricalDistribution& dist,
                                       std::span<const double> levels) {
  std::vector<double> out;
  out.reserve(levels.size());
  for (double p : levels) out.push_back(dist.quantile(p));
  return out;
}

}  // namespace logitgof
