#pragma once

// Weighted quantile correlation statistics for the logistic location family
// (W_n) and location-scale family (V_n), computed from order statistics and
// the per-cell weight integrals
//
//   a_k = int_{(k-1)/n}^{k/n} 6t(1-t) ln(t/(1-t)) dt,
//   b_k = int_{(k-1)/n}^{k/n} 6t(1-t) dt.

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace logitgof {

enum class StatisticKind { Location, LocationScale };

/// "w" for Location, "v" for LocationScale.
std::string_view to_string(StatisticKind kind) noexcept;
/// Accepts "w"/"v" (case-insensitive). Throws std::invalid_argument otherwise.
StatisticKind parse_kind(std::string_view text);

/// Raised when the weighted variance of a sample is not positive.
class DegenerateSample : public std::runtime_error {
 public:
  explicit DegenerateSample(const std::string& what) : std::runtime_error(what) {}
};

/// Raw observations together with their order statistics.
class Sample {
 public:
  /// Throws std::invalid_argument if fewer than two values or any is non-finite.
  explicit Sample(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> sorted() const noexcept { return sorted_; }
  std::size_t size() const noexcept { return sorted_.size(); }

 private:
  std::vector<double> values_;
  std::vector<double> sorted_;
};

struct CoefficientTable {
  std::size_t n = 0;
  std::vector<double> a;
  std::vector<double> b;
};

/// Primitive of 6t(1-t) ln(t/(1-t)), with the limits at 0 and 1 set to 0.
double a_primitive(double t);
/// Primitive of 6t(1-t), i.e. 3t^2 - 2t^3.
double b_primitive(double t);

/// Builds the table for n cells. Throws std::invalid_argument for n < 1.
CoefficientTable compute_coefficients(std::size_t n);

/// Process-wide cached table for n; safe under concurrent first access.
std::shared_ptr<const CoefficientTable> coefficients(std::size_t n);

struct TestResult {
  StatisticKind kind = StatisticKind::LocationScale;
  std::size_t n = 0;
  double statistic = 0.0;  // n * raw
  double raw = 0.0;        // W_n or V_n
};

// Sorted-input kernels. `sorted` must be non-decreasing with sorted.size()
// equal to table.n; no allocation happens here, so the Monte Carlo loops call
// these directly.
double raw_statistic_w(std::span<const double> sorted, const CoefficientTable& table);
double raw_statistic_v(std::span<const double> sorted, const CoefficientTable& table);
double raw_statistic(StatisticKind kind, std::span<const double> sorted,
                     const CoefficientTable& table);

TestResult statistic_w(const Sample& sample);
/// Throws DegenerateSample for a (near-)constant sample.
TestResult statistic_v(const Sample& sample);
TestResult evaluate(StatisticKind kind, const Sample& sample);

}  // namespace logitgof
