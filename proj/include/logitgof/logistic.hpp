#pragma once

// Standard logistic law G(x) = 1 / (1 + e^{-x}) and the weight
// w(t) = 6t(1-t) that defines both quantile correlation statistics.

#include <numbers>

namespace logitgof {

/// Weighted moments of the logistic quantile function under w(t) = 6t(1-t).
struct WeightedMoments {
  double mu1;
  double mu2;
  double nu;  // mu2 - mu1^2
};

/// pi^2/3 - 2, the generated variance nu(G, w) of the logistic law.
inline constexpr double kLogisticNu = std::numbers::pi * std::numbers::pi / 3.0 - 2.0;

namespace logistic {

/// Throws std::domain_error for non-finite x.
double cdf(double x);

/// Density e^{-x} / (1 + e^{-x})^2. Throws std::domain_error for non-finite x.
double pdf(double x);

/// ln(u / (1 - u)). Throws std::domain_error unless 0 < u < 1.
double quantile(double u);

/// 6t(1-t). Throws std::domain_error unless 0 < t < 1.
double weight(double t);

/// Closed-form constants, mu1 = 0 and mu2 = nu = pi^2/3 - 2.
WeightedMoments weighted_moments() noexcept;

}  // namespace logistic
}  // namespace logitgof
