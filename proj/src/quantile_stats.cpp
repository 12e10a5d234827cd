#include "logitgof/quantile_stats.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>

#include "logitgof/logistic.hpp"

namespace logitgof {

std::string_view to_string(StatisticKind kind) noexcept {
  return kind == StatisticKind::Location ? "w" : "v";
}

StatisticKind parse_kind(std::string_view text) {
  if (text.size() == 1) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[0])));
    if (c == 'w') return StatisticKind::Location;
    if (c == 'v') return StatisticKind::LocationScale;
  }
  throw std::invalid_argument("unknown statistic kind '" + std::string(text) +
                              "' (expected v or w)");
}

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw std::invalid_argument("a sample needs at least two observations");
  }
  for (double x : values_) {
    if (!std::isfinite(x)) throw std::invalid_argument("sample contains a non-finite value");
  }
  sorted_ = values_;
  std::sort(sorted_.begin(), sorted_.end());
}

double a_primitive(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  const double s = 1.0 - t;
  return t * t * (3.0 - 2.0 * t) * (std::log(t) - std::log1p(-t)) + std::log1p(-t) + t * s;
}

double b_primitive(double t) { return t * t * (3.0 - 2.0 * t); }

CoefficientTable compute_coefficients(std::size_t n) {
  if (n < 1) throw std::invalid_argument("coefficient table needs n >= 1");
  CoefficientTable table;
  table.n = n;
  table.a.assign(n, 0.0);
  table.b.assign(n, 0.0);

  const double nd = static_cast<double>(n);
  const double n3 = nd * nd * nd;
  // Left half from the primitive; the right half by a_k = -a_{n+1-k},
  // b_k = b_{n+1-k}. Cells touching t = 1/2 from the left stay exact.
  for (std::size_t k = 1; 2 * k <= n + 1; ++k) {
    const double kd = static_cast<double>(k);
    double a = a_primitive(kd / nd) - a_primitive((kd - 1.0) / nd);
    if (2 * k == n + 1) a = 0.0;  // middle cell of odd n
    // b_k = (3(2k-1)n - 2(3k^2-3k+1)) / n^3 with an exact numerator for n < 2^17.
    const double numerator = 3.0 * (2.0 * kd - 1.0) * nd - 2.0 * (3.0 * kd * kd - 3.0 * kd + 1.0);
    const double b = numerator / n3;
    table.a[k - 1] = a;
    table.b[k - 1] = b;
    table.a[n - k] = -a;
    table.b[n - k] = b;
  }
  if (n % 2 == 1) table.a[n / 2] = 0.0;
  return table;
}

std::shared_ptr<const CoefficientTable> coefficients(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const CoefficientTable>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::make_shared<const CoefficientTable>(compute_coefficients(n))).first;
  }
  return it->second;
}

namespace {

struct WeightedSums {
  double variance;  // sum b d^2 - (sum b d)^2, d = x - weighted mean
  double a_dot;     // sum a x, evaluated on the centred values
};

WeightedSums weighted_sums(std::span<const double> sorted, const CoefficientTable& table) {
  if (sorted.size() != table.n) {
    throw std::invalid_argument("sample size does not match coefficient table");
  }
  const auto& a = table.a;
  const auto& b = table.b;
  double mean = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) mean += b[k] * sorted[k];

  double m1 = 0.0;
  double m2 = 0.0;
  double ad = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const double d = sorted[k] - mean;
    m1 += b[k] * d;
    m2 += b[k] * d * d;
    ad += a[k] * d;
  }
  return {m2 - m1 * m1, ad};
}

}  // namespace

double raw_statistic_w(std::span<const double> sorted, const CoefficientTable& table) {
  const auto s = weighted_sums(sorted, table);
  return kLogisticNu + s.variance - 2.0 * s.a_dot;
}

double raw_statistic_v(std::span<const double> sorted, const CoefficientTable& table) {
  const auto s = weighted_sums(sorted, table);
  if (!(s.variance > 0.0)) {
    throw DegenerateSample("weighted sample variance is zero; V_n is undefined for a constant sample");
  }
  const double r = 1.0 - s.a_dot * s.a_dot / (kLogisticNu * s.variance);
  // |r - [0,1]| can only come from rounding (Cauchy-Schwarz bounds the ratio by 1).
  return std::clamp(r, 0.0, 1.0);
}

double raw_statistic(StatisticKind kind, std::span<const double> sorted,
                     const CoefficientTable& table) {
  return kind == StatisticKind::Location ? raw_statistic_w(sorted, table)
                                         : raw_statistic_v(sorted, table);
}

TestResult evaluate(StatisticKind kind, const Sample& sample) {
  const auto table = coefficients(sample.size());
  TestResult result;
  result.kind = kind;
  result.n = sample.size();
  result.raw = raw_statistic(kind, sample.sorted(), *table);
  result.statistic = static_cast<double>(result.n) * result.raw;
  return result;
}

TestResult statistic_w(const Sample& sample) { return evaluate(StatisticKind::Location, sample); }

TestResult statistic_v(const Sample& sample) {
  return evaluate(StatisticKind::LocationScale, sample);
}

}  // namespace logitgof
