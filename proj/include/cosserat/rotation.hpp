#pragma once

#include <cmath>

#include "cosserat/tensor.hpp"

namespace cosserat {

// Unit quaternion (w, x, y, z). Used for drift-free sampling of rotation
// fields and for the minimizer's rotational degrees of freedom.
struct Quat {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  Quat() = default;
  Quat(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static Quat from_axis_angle(const Vec3& axis, double angle) {
    Vec3 u = cosserat::normalized(axis);
    double s = std::sin(0.5 * angle);
    return {std::cos(0.5 * angle), s * u[0], s * u[1], s * u[2]};
  }

  // exp of the rotation vector r (rotation by |r| about r/|r|).
  static Quat from_rotvec(const Vec3& r) {
    double th = cosserat::norm(r);
    if (th < 1e-300) return {1.0, 0.5 * r[0], 0.5 * r[1], 0.5 * r[2]};
    double s = std::sin(0.5 * th) / th;
    return {std::cos(0.5 * th), s * r[0], s * r[1], s * r[2]};
  }

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

  Quat normalized() const {
    double n = norm();
    return {w / n, x / n, y / n, z / n};
  }

  Quat conjugate() const { return {w, -x, -y, -z}; }

  Mat3 to_matrix() const {
    Mat3 r;
    double ww = w * w, xx = x * x, yy = y * y, zz = z * z;
    r(0, 0) = ww + xx - yy - zz;
    r(0, 1) = 2.0 * (x * y - w * z);
    r(0, 2) = 2.0 * (x * z + w * y);
    r(1, 0) = 2.0 * (x * y + w * z);
    r(1, 1) = ww - xx + yy - zz;
    r(1, 2) = 2.0 * (y * z - w * x);
    r(2, 0) = 2.0 * (x * z - w * y);
    r(2, 1) = 2.0 * (y * z + w * x);
    r(2, 2) = ww - xx - yy + zz;
    return r;
  }
};

inline Quat operator*(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline double rotation_defect(const Mat3& r) {
  return norm(transpose(r) * r - Mat3::identity());
}

inline bool is_rotation(const Mat3& r, double tol = 1e-12) {
  return rotation_defect(r) <= tol && det(r) > 0.0;
}

// Mat3 constrained to SO(3).
struct Rot3 {
  Mat3 m;

  Rot3() : m(Mat3::identity()) {}
  explicit Rot3(const Mat3& r, double tol = 1e-12) : m(r) {
    if (!is_rotation(r, tol))
      throw NotARotation("Rot3: matrix is not in SO(3) within tolerance");
  }

  const Mat3& matrix() const { return m; }
  operator const Mat3&() const { return m; }
};

// Orthogonal polar factor of F with det F > 0, by the scaled Newton
// iteration X <- (zeta X + zeta^{-1} X^{-T}) / 2.
inline Rot3 polar_factor(const Mat3& f) {
  if (det(f) <= 1e-12)
    throw Degenerate("polar_factor: det F <= 1e-12");
  Mat3 x = f;
  for (int it = 0; it < 100; ++it) {
    Mat3 xit = transpose(inverse(x));
    double zeta = std::pow(std::fabs(det(xit)) / std::fabs(det(x)), 0.25);
    Mat3 next = 0.5 * (zeta * x + (1.0 / zeta) * xit);
    double delta = norm(next - x);
    x = next;
    if (delta < 1e-14) break;
  }
  return Rot3(x, 1e-12);
}

}  // namespace cosserat
