#pragma once

#include <string>
#include <vector>

namespace logitgof {

struct CheckResult {
  std::string name;
  bool passed = false;
  double deviation = 0.0;  // worst observed deviation
  double tolerance = 0.0;
  std::string detail;
};

/// Numeric checks of the eigensystem and of the series coefficients:
/// eigenfunction orthonormality, the Jacobi integral identity against
/// quadrature, residual scaling of the boundary-cell integral asymptotics,
/// recomposition of the linear series coefficients, the eigenvalue ODE and
/// the quadratic coefficient identity.
std::vector<CheckResult> run_verification();

}  // namespace logitgof
