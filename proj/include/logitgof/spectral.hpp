#pragma once

// Karhunen-Loeve eigensystem of the weighted Brownian bridge
// Z(t) = B(t) / sqrt(t(1-t)): eigenvalues 1/(k(k+1)) with eigenfunctions
// built from Jacobi (1,1) polynomials, plus numeric oracles for the two
// integral identities behind the series coefficients of the limit laws.

#include <cstddef>

namespace logitgof::spectral {

struct EigenPair {
  int k;
  double lambda;      // 1 / (k(k+1))
  double norm_const;  // sqrt((2k+1)(k+1)/k)
};

/// P_n^{(1,1)}(x) by the forward three-term recurrence.
/// Throws std::domain_error for n < 0 or x outside [-1, 1].
double jacobi_p11(int n, double x);

/// 1 / (k(k+1)). Throws std::domain_error for k < 1.
double eigenvalue(int k);
EigenPair eigen_pair(int k);

/// sqrt((2k+1)(k+1)/k) P_{k-1}^{(1,1)}(2t-1) sqrt(t(1-t)), t in (0, 1).
double eigenfunction(int k, double t);

/// (min(s,t) - st) / sqrt(s(1-s)t(1-t)), s, t in (0, 1).
double covariance_kernel(double s, double t);

/// int_{-1}^{1} P_n^{(1,1)}(x) (1-x^2) ln((1+x)/(1-x)) dx in closed form:
/// zero for even n, 8 / ((2j+1)(2j+3)(j+2)) for n = 2j+1.
double lemma_b_closed_form(int n);

/// The same integral by tanh-sinh quadrature. Throws std::runtime_error if
/// the error estimate does not reach 1e-11.
double lemma_b_quadrature(int n);

struct LemmaACheck {
  double numeric;   // n int_0^{1/(n+1)} ln^k(nt/(1-t)) t(1-t) dt
  double leading;   // (-1)^k k! / 2^{k+1} / n
  double residual;  // numeric - leading
};

/// Requires n >= 2 and 0 <= k <= 6 (std::domain_error otherwise).
LemmaACheck lemma_a_check(int n, int k);

}  // namespace logitgof::spectral

namespace logitgof::spectral {

/// Coefficient of Z_{2l} in the linear part of the V series, rebuilt from the
/// eigensystem: 6 sqrt(lambda_{2l}) norm_{2l} / 8 * lemma_b_closed_form(2l-1).
double recomposed_linear_coefficient(int l);

}  // namespace logitgof::spectral
