#pragma once

#include <cstdint>
#include <vector>

#include "cosserat/energy.hpp"
#include "cosserat/field.hpp"
#include "cosserat/rotation.hpp"
#include "cosserat/surface.hpp"

namespace cosserat {

// Discretized shell configuration on a regular parameter grid: midsurface
// position m and unit-quaternion elastic rotation per node, with Dirichlet
// masks. The unknown of the minimizer.
struct ShellState {
  int n1 = 0, n2 = 0;
  Vec2 origin;
  double h1 = 0.0, h2 = 0.0;
  std::vector<Vec3> m;
  std::vector<Quat> q;
  std::vector<std::uint8_t> fix_m;
  std::vector<std::uint8_t> fix_q;

  int idx(int i, int j) const { return i * n2 + j; }
  Vec2 param(int i, int j) const {
    return {origin.u + i * h1, origin.v + j * h2};
  }
  bool boundary(int i, int j) const {
    return i == 0 || j == 0 || i == n1 - 1 || j == n2 - 1;
  }

  // Zero-energy reference: m = y0 at the nodes, Qe = identity.
  static ShellState flat_reference(const SurfacePatch& patch, int n1, int n2);

  void clamp_boundary();
  // seeded random rotation perturbation (amplitude in radians) on
  // unmasked nodes
  void perturb_rotations(double amplitude, unsigned seed);
  void renormalize();
};

double total_energy(const ShellState& state, const SurfacePatch& patch,
                    const EnergyParams& params);

// Central-difference gradient of total_energy on the unmasked degrees of
// freedom, evaluated stencil-locally. Layout: for each node in row-major
// order, 3 m-components (if free) then 3 rotation-tangent components
// (if free).
std::vector<double> fd_gradient(const ShellState& state,
                                const SurfacePatch& patch,
                                const EnergyParams& params);

struct MinimizeOptions {
  int max_iter = 500;
  double grad_tol = 1e-6;
  unsigned seed = 0;  // recorded for reproducibility of the caller's setup
};

struct IterationRecord {
  double energy;
  double grad_norm;
  double step;
};

struct MinimizeReport {
  std::vector<IterationRecord> trace;
  ShellState final_state;
  bool converged = false;
  double initial_energy = 0.0;
  double final_energy = 0.0;
  double final_grad_norm = 0.0;
  int iterations = 0;
};

// Projected gradient descent with Barzilai-Borwein trial steps and Armijo
// backtracking; rotation updates in the quaternion tangent space with
// renormalization. The energy trace is non-increasing.
MinimizeReport minimize(const ShellState& state0, const SurfacePatch& patch,
                        const EnergyParams& params,
                        const MinimizeOptions& options);

}  // namespace cosserat
