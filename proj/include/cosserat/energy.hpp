#pragma once

#include "cosserat/tensor.hpp"

namespace cosserat {

// Isotropic Cosserat material parameters. All positivity constraints
// are enforced at construction.
struct EnergyParams {
  double mu;     // shear modulus
  double kappa;  // bulk modulus
  double mu_c;   // Cosserat couple modulus
  double L_c;    // internal length
  double a1, a2, a3;  // dimensionless curvature coefficients
  double p;      // curvature exponent, >= 2

  static EnergyParams checked(double mu, double kappa, double mu_c,
                              double L_c, double a1, double a2, double a3,
                              double p);
};

// W = mu |dev3 sym E|^2 + mu_c |skew E|^2 + kappa/2 (tr E)^2
//   + mu L_c^p (a1 |dev3 sym D|^2 + a2 |skew D|^2 + a3 (tr D)^2)^{p/2}
double energy_3d(const Mat3& strain, const Mat3& dislocation,
                 const EnergyParams& params);

// Shell form: identical structure restricted to p = 2 (quadratic).
double energy_shell(const Mat3& strain, const Mat3& dislocation,
                    const EnergyParams& params);

}  // namespace cosserat
