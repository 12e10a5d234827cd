#include "logitgof/verification.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "logitgof/limit_law.hpp"
#include "logitgof/spectral.hpp"

namespace logitgof {

namespace {

CheckResult make_check(std::string name, double deviation, double tolerance,
                       std::string detail = {}) {
  return {std::move(name), deviation <= tolerance, deviation, tolerance, std::move(detail)};
}

CheckResult gram_check() {
  constexpr int kModes = 10;
  double worst = 0.0;
  for (int k = 1; k <= kModes; ++k) {
    for (int l = k; l <= kModes; ++l) {
      // f_k f_l is a polynomial of degree k + l <= 20; 30 Gauss nodes are exact.
      const double g = boost::math::quadrature::gauss<double, 30>::integrate(
          [k, l](double t) { return spectral::eigenfunction(k, t) * spectral::eigenfunction(l, t); },
          0.0, 1.0);
      worst = std::max(worst, std::abs(g - (k == l ? 1.0 : 0.0)));
    }
  }
  return make_check("eigenfunction Gram matrix, k,l <= 10", worst, 1e-8);
}

CheckResult lemma_b_check() {
  double worst = 0.0;
  std::ostringstream detail;
  for (int n = 0; n <= 10; ++n) {
    const double q = spectral::lemma_b_quadrature(n);
    const double c = spectral::lemma_b_closed_form(n);
    worst = std::max(worst, std::abs(q - c));
    if (n == 1) detail << "n=1: |4/3 - quadrature| = " << std::abs(4.0 / 3.0 - q);
  }
  return make_check("Jacobi log integral, closed form vs quadrature, n <= 10", worst, 1e-9,
                    detail.str());
}

CheckResult lemma_a_check() {
  double worst = 0.0;
  std::ostringstream detail;
  constexpr int kSizes[] = {50, 100, 200, 400};
  for (int k = 0; k <= 3; ++k) {
    for (int i = 0; i + 1 < 4; ++i) {
      const double r1 = spectral::lemma_a_check(kSizes[i], k).residual;
      const double r2 = spectral::lemma_a_check(kSizes[i + 1], k).residual;
      const double ratio = r1 / r2;
      worst = std::max(worst, std::abs(ratio - 4.0));
      if (i == 2) detail << (k ? ", " : "") << "k=" << k << " ratio(200/400)=" << ratio;
    }
  }
  return make_check("boundary integral residual ratio when n doubles (expect 4)", worst, 0.3,
                    detail.str());
}

CheckResult recomposition_check() {
  double worst = 0.0;
  for (int l = 1; l <= 20; ++l) {
    worst = std::max(worst, std::abs(spectral::recomposed_linear_coefficient(l) - lin_coeff(l)));
  }
  return make_check("linear series coefficient recomposed from eigensystem, l <= 20", worst, 1e-12);
}

CheckResult quad_coeff_check() {
  double worst = 0.0;
  for (int k = 2; k <= 100; ++k) {
    worst = std::max(worst, std::abs(quad_coeff(k) - 6.0 * spectral::eigenvalue(k)));
  }
  return make_check("quadratic series coefficient equals 6 lambda_k, k <= 100", worst, 1e-15);
}

// y_k(t) = f_k(t) sqrt(t(1-t)) is a polynomial of degree k+1, so a four-level
// Richardson table of central differences recovers y'' up to rounding.
double second_derivative(int k, double t) {
  auto y = [k](double s) { return spectral::eigenfunction(k, s) * std::sqrt(s * (1.0 - s)); };
  constexpr int kLevels = 4;
  double table[kLevels];
  double h = 0.02;
  for (int i = 0; i < kLevels; ++i, h /= 2.0) {
    table[i] = (y(t + h) - 2.0 * y(t) + y(t - h)) / (h * h);
  }
  for (int j = 1; j < kLevels; ++j) {
    const double factor = std::ldexp(1.0, 2 * j);
    for (int i = kLevels - 1; i >= j; --i) {
      table[i] = (factor * table[i] - table[i - 1]) / (factor - 1.0);
    }
  }
  return table[kLevels - 1];
}

CheckResult ode_check() {
  double worst = 0.0;
  for (int k = 1; k <= 8; ++k) {
    const double inv_lambda = 1.0 / spectral::eigenvalue(k);
    for (int i = 1; i < 20; ++i) {
      const double t = i / 20.0;
      const double y = spectral::eigenfunction(k, t) * std::sqrt(t * (1.0 - t));
      worst = std::max(worst, std::abs(second_derivative(k, t) + inv_lambda * y / (t * (1.0 - t))));
    }
  }
  return make_check("eigenvalue ODE residual y'' + y/(lambda t(1-t)), k <= 8", worst, 1e-6);
}

CheckResult jacobi_bound_check() {
  double worst = 0.0;
  for (int n = 0; n <= 50; ++n) {
    for (int i = 0; i <= 400; ++i) {
      const double x = -1.0 + i / 200.0;
      worst = std::max(worst, std::abs(spectral::jacobi_p11(n, x)) - (n + 1.0));
    }
  }
  return make_check("|P_n^(1,1)(x)| <= n + 1 on [-1, 1], n <= 50", std::max(worst, 0.0), 1e-9);
}

}  // namespace

std::vector<CheckResult> run_verification() {
  return {gram_check(),       lemma_b_check(), lemma_a_check(),     recomposition_check(),
          quad_coeff_check(), ode_check(),     jacobi_bound_check()};
}

}  // namespace logitgof
