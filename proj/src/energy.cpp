#include "cosserat/energy.hpp"

#include <cmath>

#include "cosserat/errors.hpp"

namespace cosserat {

EnergyParams EnergyParams::checked(double mu, double kappa, double mu_c,
                                   double L_c, double a1, double a2,
                                   double a3, double p) {
  if (!(mu > 0.0 && kappa > 0.0 && mu_c > 0.0 && L_c > 0.0))
    throw InvalidParams("EnergyParams: mu, kappa, mu_c, L_c must be positive");
  if (!(a1 > 0.0 && a2 > 0.0 && a3 > 0.0))
    throw InvalidParams("EnergyParams: a1, a2, a3 must be positive");
  if (!(p >= 2.0)) throw InvalidParams("EnergyParams: p must be >= 2");
  return {mu, kappa, mu_c, L_c, a1, a2, a3, p};
}

double energy_3d(const Mat3& strain, const Mat3& dislocation,
                 const EnergyParams& prm) {
  SplitParts e = split(strain);
  SplitParts d = split(dislocation);
  double w_mp = prm.mu * double_contract(e.dev3sym, e.dev3sym) +
                prm.mu_c * double_contract(e.skew, e.skew) +
                0.5 * prm.kappa * e.trace * e.trace;
  double q = prm.a1 * double_contract(d.dev3sym, d.dev3sym) +
             prm.a2 * double_contract(d.skew, d.skew) +
             prm.a3 * d.trace * d.trace;
  double w_curv = prm.mu * std::pow(prm.L_c, prm.p) * std::pow(q, 0.5 * prm.p);
  return w_mp + w_curv;
}

double energy_shell(const Mat3& strain, const Mat3& dislocation,
                    const EnergyParams& prm) {
  if (prm.p != 2.0)
    throw InvalidParams("energy_shell: the shell energy requires p = 2");
  return energy_3d(strain, dislocation, prm);
}

}  // namespace cosserat
