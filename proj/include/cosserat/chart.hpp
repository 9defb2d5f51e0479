#pragma once

#include <functional>

#include "cosserat/field.hpp"
#include "cosserat/tensor.hpp"

namespace cosserat {

// 3D curvilinear chart Theta : Omega -> R^3 with optional analytic
// first and second partials. det(grad Theta) must stay positive on the
// sampled box.
struct Chart3 {
  std::function<Vec3(const Vec3&)> theta;
  // jacobian(x) has the covariant base vectors g_i as columns
  std::function<Mat3(const Vec3&)> jacobian;
  // second(i, j, x) = d^2 Theta / dx_i dx_j
  std::function<Vec3(int, int, const Vec3&)> second;
  Box3 domain{Vec3(0, 0, 0), Vec3(1, 1, 1)};

  static Chart3 identity(const Box3& box);

  Vec3 base_vector(int i, const Vec3& x) const;
  Vec3 base_vector_deriv(int i, int j, const Vec3& x) const;
};

// Pointwise chart geometry: bases, metric, Christoffel symbols,
// epsilon components.
struct ChartFrames {
  Vec3 g_lo[3];              // covariant g_i
  Vec3 g_up[3];              // contravariant g^j
  Mat3 metric;               // g_ij
  double g = 0.0;            // det(g_ij)
  double sqrt_g = 0.0;
  double christoffel[3][3][3] = {};  // [r][i][j] = Gamma^r_ij

  double eps_lo(int i, int j, int k) const {
    return sqrt_g * levi_civita(i, j, k);
  }
  double eps_up(int i, int j, int k) const {
    return levi_civita(i, j, k) / sqrt_g;
  }
};

ChartFrames frames_at(const Chart3& chart, const Vec3& x);

}  // namespace cosserat
