#pragma once

#include <cmath>
#include <functional>

#include "cosserat/errors.hpp"
#include "cosserat/tensor.hpp"

namespace cosserat {

struct Vec2 {
  double u = 0.0, v = 0.0;

  Vec2() = default;
  Vec2(double u_, double v_) : u(u_), v(v_) {}

  double operator[](int i) const { return i == 0 ? u : v; }
  double& operator[](int i) { return i == 0 ? u : v; }
};

inline Vec2 operator+(const Vec2& a, const Vec2& b) {
  return {a.u + b.u, a.v + b.v};
}
inline double norm(const Vec2& p) { return std::hypot(p.u, p.v); }

struct Box3 {
  Vec3 lo, hi;

  bool contains(const Vec3& x, double margin = 0.0) const {
    for (int i = 0; i < 3; ++i)
      if (x[i] < lo[i] + margin || x[i] > hi[i] - margin) return false;
    return true;
  }
};

struct Box2 {
  Vec2 lo, hi;

  bool contains(const Vec2& x, double margin = 0.0) const {
    for (int i = 0; i < 2; ++i)
      if (x[i] < lo[i] + margin || x[i] > hi[i] - margin) return false;
    return true;
  }
};

// Central-difference step h = eps^{1/3} max(1, |x|).
inline double fd_step(double xnorm) {
  constexpr double eps = 2.2e-16;
  return std::cbrt(eps) * std::max(1.0, xnorm);
}

// Evaluatable field over a 3D parameter box. Derivatives are analytic
// when deriv_an is set, otherwise second-order central differences.
template <class V>
struct Field3T {
  std::function<V(const Vec3&)> value;
  std::function<V(int, const Vec3&)> deriv_an;

  V operator()(const Vec3& x) const { return value(x); }

  bool analytic() const { return static_cast<bool>(deriv_an); }

  V deriv(int i, const Vec3& x) const {
    if (deriv_an) return deriv_an(i, x);
    double h = fd_step(norm(x));
    Vec3 xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    return (value(xp) - value(xm)) * (0.5 / h);
  }

  static Field3T constant(const V& c) {
    return {[c](const Vec3&) { return c; },
            [](int, const Vec3&) { return V{} * 0.0; }};
  }
};

// Same over a 2D parameter rectangle.
template <class V>
struct Field2T {
  std::function<V(const Vec2&)> value;
  std::function<V(int, const Vec2&)> deriv_an;

  V operator()(const Vec2& x) const { return value(x); }

  bool analytic() const { return static_cast<bool>(deriv_an); }

  V deriv(int a, const Vec2& x) const {
    if (deriv_an) return deriv_an(a, x);
    double h = fd_step(norm(x));
    Vec2 xp = x, xm = x;
    xp[a] += h;
    xm[a] -= h;
    return (value(xp) - value(xm)) * (0.5 / h);
  }

  static Field2T constant(const V& c) {
    return {[c](const Vec2&) { return c; },
            [](int, const Vec2&) { return V{} * 0.0; }};
  }
};

using ScalarField3 = Field3T<double>;
using VecField3 = Field3T<Vec3>;
using MatField3 = Field3T<Mat3>;

using ScalarField2 = Field2T<double>;
using VecField2 = Field2T<Vec2>;
using SurfVecField = Field2T<Vec3>;
using SurfMatField = Field2T<Mat3>;

}  // namespace cosserat
