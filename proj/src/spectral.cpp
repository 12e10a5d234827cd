#include "logitgof/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace logitgof::spectral {

double jacobi_p11(int n, double x) {
  if (n < 0) throw std::domain_error("jacobi_p11: degree must be >= 0");
  if (!(x >= -1.0 && x <= 1.0)) throw std::domain_error("jacobi_p11: x must lie in [-1, 1]");
  if (n == 0) return 1.0;
  // m(m+2) P_m = (2m+1)(m+1) x P_{m-1} - m(m+1) P_{m-2}
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int m = 2; m <= n; ++m) {
    const double md = m;
    const double next = ((2.0 * md + 1.0) * (md + 1.0) * x * cur - md * (md + 1.0) * prev) /
                        (md * (md + 2.0));
    prev = cur;
    cur = next;
  }
  return cur;
}

double eigenvalue(int k) {
  if (k < 1) throw std::domain_error("eigenvalue: mode index must be >= 1");
  const double kd = k;
  return 1.0 / (kd * (kd + 1.0));
}

EigenPair eigen_pair(int k) {
  const double lambda = eigenvalue(k);
  const double kd = k;
  return {k, lambda, std::sqrt((2.0 * kd + 1.0) * (kd + 1.0) / kd)};
}

double eigenfunction(int k, double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("eigenfunction: t must lie in (0, 1)");
  const auto pair = eigen_pair(k);
  return pair.norm_const * jacobi_p11(k - 1, 2.0 * t - 1.0) * std::sqrt(t * (1.0 - t));
}

double covariance_kernel(double s, double t) {
  if (!(s > 0.0 && s < 1.0 && t > 0.0 && t < 1.0)) {
    throw std::domain_error("covariance_kernel: arguments must lie in (0, 1)");
  }
  return (std::min(s, t) - s * t) / std::sqrt(s * (1.0 - s) * t * (1.0 - t));
}

double lemma_b_closed_form(int n) {
  if (n < 0) throw std::domain_error("lemma_b_closed_form: n must be >= 0");
  if (n % 2 == 0) return 0.0;
  const double j = (n - 1) / 2;
  return 8.0 / ((2.0 * j + 1.0) * (2.0 * j + 3.0) * (j + 2.0));
}

double lemma_b_quadrature(int n) {
  if (n < 0) throw std::domain_error("lemma_b_quadrature: n must be >= 0");
  // The two-argument form receives xc, the signed distance to the nearer
  // endpoint, so 1 - x and 1 + x stay accurate close to +-1.
  auto integrand = [n](double x, double xc) {
    double one_minus = 1.0 - x;
    double one_plus = 1.0 + x;
    if (xc > 0.0) one_minus = xc;
    else one_plus = -xc;
    if (one_minus <= 0.0 || one_plus <= 0.0) return 0.0;
    return jacobi_p11(n, x) * one_minus * one_plus * (std::log(one_plus) - std::log(one_minus));
  };
  boost::math::quadrature::tanh_sinh<double> integrator;
  double error = 0.0;
  double l1 = 0.0;
  const double value = integrator.integrate(integrand, -1.0, 1.0, 1e-14, &error, &l1);
  if (!(error <= 1e-11 * std::max(1.0, l1))) {
    throw std::runtime_error("lemma_b_quadrature: no convergence for n = " + std::to_string(n));
  }
  return value;
}

LemmaACheck lemma_a_check(int n, int k) {
  if (n < 2) throw std::domain_error("lemma_a_check: n must be >= 2");
  if (k < 0 || k > 6) throw std::domain_error("lemma_a_check: k must lie in [0, 6]");
  const double nd = n;
  boost::math::quadrature::tanh_sinh<double> integrator;
  double error = 0.0;
  double l1 = 0.0;
  double numeric = 0.0;
  if (k < 3) {
    auto integrand = [nd, k](double t) {
      if (t <= 0.0) return 0.0;
      return std::pow(std::log(nd * t / (1.0 - t)), k) * t * (1.0 - t);
    };
    numeric = nd * integrator.integrate(integrand, 0.0, 1.0 / (nd + 1.0), 1e-14, &error, &l1);
    error *= nd;
    l1 *= nd;
  } else {
    // y = n t / (1-t) maps the cell onto (0, 1) and flattens the log spike.
    auto integrand = [nd, k](double y) {
      if (y <= 0.0) return 0.0;
      const double d = 1.0 + y / nd;
      return std::pow(std::log(y), k) * y / (d * d * d * d);
    };
    numeric = integrator.integrate(integrand, 0.0, 1.0, 1e-14, &error, &l1) / nd;
    error /= nd;
    l1 /= nd;
  }
  if (!(error <= 1e-11 * std::max(l1, 1e-300))) {
    throw std::runtime_error("lemma_a_check: quadrature did not converge");
  }
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  const double sign = k % 2 == 0 ? 1.0 : -1.0;
  const double leading = sign * factorial / std::ldexp(1.0, k + 1) / nd;
  return {numeric, leading, numeric - leading};
}

}  // namespace logitgof::spectral

namespace logitgof::spectral {

double recomposed_linear_coefficient(int l) {
  if (l < 1) throw std::domain_error("recomposed_linear_coefficient: l must be >= 1");
  const auto pair = eigen_pair(2 * l);
  // int_0^1 f_k(t) sqrt(t(1-t)) ln(t/(1-t)) dt = norm_k / 8 * lemma_b(k-1) after t = (x+1)/2;
  // the factor 6 comes from the weight 6t(1-t).
  return 6.0 * std::sqrt(pair.lambda) * pair.norm_const / 8.0 * lemma_b_closed_form(2 * l - 1);
}

}  // namespace logitgof::spectral
