#pragma once

#include <array>
#include <cmath>
#include <iosfwd>

#include "cosserat/errors.hpp"

namespace cosserat {

struct Vec3 {
  std::array<double, 3> c{0.0, 0.0, 0.0};

  Vec3() = default;
  Vec3(double x, double y, double z) : c{x, y, z} {}

  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  Vec3& operator+=(const Vec3& v) {
    for (int i = 0; i < 3; ++i) c[i] += v.c[i];
    return *this;
  }
  Vec3& operator-=(const Vec3& v) {
    for (int i = 0; i < 3; ++i) c[i] -= v.c[i];
    return *this;
  }
  Vec3& operator*=(double s) {
    for (int i = 0; i < 3; ++i) c[i] *= s;
    return *this;
  }
};

inline Vec3 operator+(Vec3 u, const Vec3& v) { return u += v; }
inline Vec3 operator-(Vec3 u, const Vec3& v) { return u -= v; }
inline Vec3 operator*(double s, Vec3 v) { return v *= s; }
inline Vec3 operator*(Vec3 v, double s) { return v *= s; }
inline Vec3 operator/(Vec3 v, double s) { return v *= (1.0 / s); }
inline Vec3 operator-(const Vec3& v) { return {-v[0], -v[1], -v[2]}; }

inline double dot(const Vec3& u, const Vec3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

inline Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) {
  double n = norm(v);
  return {v[0] / n, v[1] / n, v[2] / n};
}

inline Vec3 basis_vector(int i) {
  Vec3 e;
  e[i] = 1.0;
  return e;
}

// Second-order tensor, row-major. Acts on column vectors from the left;
// the dyad u (x) v maps w to u (v.w).
struct Mat3 {
  std::array<double, 9> m{};

  Mat3() = default;

  double& operator()(int i, int j) {
    return m[static_cast<std::size_t>(3 * i + j)];
  }
  double operator()(int i, int j) const {
    return m[static_cast<std::size_t>(3 * i + j)];
  }

  static Mat3 identity() {
    Mat3 r;
    r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
    return r;
  }
  static Mat3 zero() { return {}; }
  static Mat3 diag(double a, double b, double c) {
    Mat3 r;
    r(0, 0) = a;
    r(1, 1) = b;
    r(2, 2) = c;
    return r;
  }
  static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
    Mat3 r;
    for (int j = 0; j < 3; ++j) {
      r(0, j) = r0[j];
      r(1, j) = r1[j];
      r(2, j) = r2[j];
    }
    return r;
  }
  static Mat3 from_cols(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
      r(i, 0) = c0[i];
      r(i, 1) = c1[i];
      r(i, 2) = c2[i];
    }
    return r;
  }

  Vec3 row(int i) const { return {(*this)(i, 0), (*this)(i, 1), (*this)(i, 2)}; }
  Vec3 col(int j) const { return {(*this)(0, j), (*this)(1, j), (*this)(2, j)}; }

  Mat3& operator+=(const Mat3& o) {
    for (int i = 0; i < 9; ++i) m[i] += o.m[i];
    return *this;
  }
  Mat3& operator-=(const Mat3& o) {
    for (int i = 0; i < 9; ++i) m[i] -= o.m[i];
    return *this;
  }
  Mat3& operator*=(double s) {
    for (int i = 0; i < 9; ++i) m[i] *= s;
    return *this;
  }
};

inline Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
inline Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
inline Mat3 operator*(double s, Mat3 a) { return a *= s; }
inline Mat3 operator*(Mat3 a, double s) { return a *= s; }
inline Mat3 operator-(const Mat3& a) { return -1.0 * a; }

inline Vec3 operator*(const Mat3& a, const Vec3& v) {
  return {dot(a.row(0), v), dot(a.row(1), v), dot(a.row(2), v)};
}

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

inline Mat3 dyad(const Vec3& u, const Vec3& v) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = u[i] * v[j];
  return r;
}

inline Mat3 transpose(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
  return r;
}

inline double trace(const Mat3& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

inline double det(const Mat3& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

inline Mat3 inverse(const Mat3& a) {
  double d = det(a);
  if (std::fabs(d) <= 1e-300) throw Degenerate("Mat3 inverse: singular matrix");
  Mat3 r;
  r(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) / d;
  r(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) / d;
  r(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) / d;
  r(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) / d;
  r(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) / d;
  r(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) / d;
  r(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) / d;
  r(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) / d;
  r(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / d;
  return r;
}

inline double double_contract(const Mat3& a, const Mat3& b) {
  double s = 0.0;
  for (int i = 0; i < 9; ++i) s += a.m[i] * b.m[i];
  return s;
}

inline double norm(const Mat3& a) { return std::sqrt(double_contract(a, a)); }

inline Mat3 sym(const Mat3& a) { return 0.5 * (a + transpose(a)); }
inline Mat3 skew(const Mat3& a) { return 0.5 * (a - transpose(a)); }
inline Mat3 dev3(const Mat3& a) {
  return a - (trace(a) / 3.0) * Mat3::identity();
}

// Cartesian alternator e_{ijk}, e_123 = 1.
constexpr double levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  return ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
}

struct SplitParts {
  Mat3 sym;
  Mat3 skew;
  Mat3 dev3sym;
  double trace;
};

inline SplitParts split(const Mat3& x) {
  SplitParts p;
  p.sym = sym(x);
  p.skew = skew(x);
  p.trace = trace(x);
  p.dev3sym = p.sym - (p.trace / 3.0) * Mat3::identity();
  return p;
}

inline Mat3 skew_from_axial(const Vec3& a) {
  Mat3 r;
  r(0, 1) = -a[2];
  r(0, 2) = a[1];
  r(1, 0) = a[2];
  r(1, 2) = -a[0];
  r(2, 0) = -a[1];
  r(2, 1) = a[0];
  return r;
}

// Axial vector of a skew tensor without the skewness precondition check.
// Reads only the strictly lower/upper triangle pairs.
inline Vec3 axl_unchecked(const Mat3& a) {
  return {0.5 * (a(2, 1) - a(1, 2)), 0.5 * (a(0, 2) - a(2, 0)),
          0.5 * (a(1, 0) - a(0, 1))};
}

inline Vec3 axl(const Mat3& a, double tol = 1e-12) {
  if (norm(a + transpose(a)) > tol)
    throw NotSkew("axl: input is not skew-symmetric within tolerance");
  return axl_unchecked(a);
}

// Cartesian epsilon double dot: (eps : T)_i = e_{ijk} T_{jk}.
inline Vec3 eps_double_dot(const Mat3& t) {
  Vec3 r;
  for (int i = 0; i < 3; ++i) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s += levi_civita(i, j, k) * t(j, k);
    r[i] = s;
  }
  return r;
}

// (u (x) v) x w := u (x) (v x w); rows of T are crossed with w.
inline Mat3 tensor_cross_vector(const Mat3& t, const Vec3& w) {
  return Mat3::from_rows(cross(t.row(0), w), cross(t.row(1), w),
                         cross(t.row(2), w));
}

// w x (u (x) v) := (w x u) (x) v; columns of T are crossed with w.
inline Mat3 vector_cross_tensor(const Vec3& w, const Mat3& t) {
  return skew_from_axial(w) * t;
}

}  // namespace cosserat
