#include "cosserat/chart.hpp"

#include <cmath>

#include "cosserat/errors.hpp"

namespace cosserat {

Chart3 Chart3::identity(const Box3& box) {
  Chart3 c;
  c.theta = [](const Vec3& x) { return x; };
  c.jacobian = [](const Vec3&) { return Mat3::identity(); };
  c.second = [](int, int, const Vec3&) { return Vec3(); };
  c.domain = box;
  return c;
}

Vec3 Chart3::base_vector(int i, const Vec3& x) const {
  if (jacobian) return jacobian(x).col(i);
  double h = fd_step(norm(x));
  Vec3 xp = x, xm = x;
  xp[i] += h;
  xm[i] -= h;
  return (theta(xp) - theta(xm)) * (0.5 / h);
}

Vec3 Chart3::base_vector_deriv(int i, int j, const Vec3& x) const {
  if (second) return second(i, j, x);
  if (jacobian) {
    double h = fd_step(norm(x));
    Vec3 xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    return (jacobian(xp).col(i) - jacobian(xm).col(i)) * (0.5 / h);
  }
  // mixed second difference of Theta; step tuned for second derivatives
  double h = std::pow(2.2e-16, 0.25) * std::max(1.0, norm(x));
  Vec3 xpp = x, xpm = x, xmp = x, xmm = x;
  xpp[i] += h;
  xpp[j] += h;
  xpm[i] += h;
  xpm[j] -= h;
  xmp[i] -= h;
  xmp[j] += h;
  xmm[i] -= h;
  xmm[j] -= h;
  return (theta(xpp) - theta(xpm) - theta(xmp) + theta(xmm)) *
         (0.25 / (h * h));
}

ChartFrames frames_at(const Chart3& chart, const Vec3& x) {
  double margin = chart.jacobian ? 0.0 : 2.0 * fd_step(norm(x));
  if (!chart.domain.contains(x, margin))
    throw OutOfDomain("frames_at: point outside chart domain (FD margin)");

  ChartFrames f;
  for (int i = 0; i < 3; ++i) f.g_lo[i] = chart.base_vector(i, x);

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      f.metric(i, j) = dot(f.g_lo[i], f.g_lo[j]);
  f.g = det(f.metric);
  if (f.g <= 1e-12)
    throw DegenerateChart("frames_at: metric determinant <= 1e-12");
  f.sqrt_g = std::sqrt(f.g);

  Mat3 jac = Mat3::from_cols(f.g_lo[0], f.g_lo[1], f.g_lo[2]);
  if (det(jac) <= 0.0)
    throw DegenerateChart("frames_at: det(grad Theta) <= 0");
  Mat3 jinv = inverse(jac);  // rows are the contravariant base vectors
  for (int i = 0; i < 3; ++i) f.g_up[i] = jinv.row(i);

  // Gamma^r_ij = g_i,j . g^r
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Vec3 gij = chart.base_vector_deriv(i, j, x);
      for (int r = 0; r < 3; ++r) {
        double v = dot(gij, f.g_up[r]);
        f.christoffel[r][i][j] = v;
        f.christoffel[r][j][i] = v;
      }
    }
  return f;
}

}  // namespace cosserat
