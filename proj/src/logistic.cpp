#include "logitgof/logistic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace logitgof::logistic {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(what) + ": argument must be finite");
  }
}

void require_open_unit(double u, const char* what) {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error(std::string(what) + ": argument must lie in (0, 1), got " +
                            std::to_string(u));
  }
}

}  // namespace

double cdf(double x) {
  require_finite(x, "logistic::cdf");
  // Only e^{-|x|} is ever formed, so nothing overflows.
  const double e = std::exp(-std::abs(x));
  return x >= 0.0 ? 1.0 / (1.0 + e) : e / (1.0 + e);
}

double pdf(double x) {
  require_finite(x, "logistic::pdf");
  const double e = std::exp(-std::abs(x));
  const double d = 1.0 + e;
  return e / (d * d);
}

double quantile(double u) {
  require_open_unit(u, "logistic::quantile");
  return std::log(u) - std::log1p(-u);
}

double weight(double t) {
  require_open_unit(t, "logistic::weight");
  return 6.0 * t * (1.0 - t);
}

WeightedMoments weighted_moments() noexcept {
  return {0.0, kLogisticNu, kLogisticNu};
}

}  // namespace logitgof::logistic
