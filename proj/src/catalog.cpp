#include "cosserat/catalog.hpp"

#include <cmath>

#include "cosserat/errors.hpp"
#include "cosserat/rotation.hpp"

namespace cosserat::catalog {

namespace {

double param_or(const std::vector<double>& params, std::size_t i,
                double fallback) {
  return i < params.size() ? params[i] : fallback;
}

}  // namespace

double AngleFn::eval(double t) const {
  return kind == Linear ? coeff * t : std::sin(coeff * t);
}

double AngleFn::deriv(double t) const {
  return kind == Linear ? coeff : coeff * std::cos(coeff * t);
}

Chart3 make_chart(const std::string& family,
                  const std::vector<double>& params) {
  if (family == "identity") {
    return Chart3::identity({Vec3(0, 0, 0), Vec3(1, 1, 1)});
  }
  if (family == "affine") {
    double d1 = param_or(params, 0, 2.0);
    double d2 = param_or(params, 1, 3.0);
    double d3 = param_or(params, 2, 1.0);
    if (d1 <= 0.0 || d2 <= 0.0 || d3 <= 0.0)
      throw InvalidParams("make_chart: affine scales must be positive");
    Chart3 c;
    c.theta = [d1, d2, d3](const Vec3& x) {
      return Vec3(d1 * x[0], d2 * x[1], d3 * x[2]);
    };
    c.jacobian = [d1, d2, d3](const Vec3&) { return Mat3::diag(d1, d2, d3); };
    c.second = [](int, int, const Vec3&) { return Vec3(); };
    c.domain = {Vec3(0, 0, 0), Vec3(1, 1, 1)};
    return c;
  }
  if (family == "cylindrical") {
    // Theta = (r cos phi, r sin phi, z) with (r, phi, z) = (x1, x2, x3);
    // the domain keeps r well away from the axis.
    Chart3 c;
    c.theta = [](const Vec3& x) {
      return Vec3(x[0] * std::cos(x[1]), x[0] * std::sin(x[1]), x[2]);
    };
    c.jacobian = [](const Vec3& x) {
      double cp = std::cos(x[1]), sp = std::sin(x[1]);
      return Mat3::from_cols(Vec3(cp, sp, 0), Vec3(-x[0] * sp, x[0] * cp, 0),
                             Vec3(0, 0, 1));
    };
    c.second = [](int i, int j, const Vec3& x) {
      double cp = std::cos(x[1]), sp = std::sin(x[1]);
      if ((i == 0 && j == 1) || (i == 1 && j == 0)) return Vec3(-sp, cp, 0);
      if (i == 1 && j == 1) return Vec3(-x[0] * cp, -x[0] * sp, 0);
      return Vec3();
    };
    c.domain = {Vec3(0.5, 0.2, 0.0), Vec3(1.5, 1.2, 1.0)};
    return c;
  }
  if (family == "perturbed") {
    double a = param_or(params, 0, 0.1);
    // Theta = x + a (sin x2, sin x3, sin x1); det grad Theta > 0 for a < 1.
    if (std::fabs(a) >= 1.0)
      throw InvalidParams("make_chart: perturbed amplitude must be below 1");
    Chart3 c;
    c.theta = [a](const Vec3& x) {
      return Vec3(x[0] + a * std::sin(x[1]), x[1] + a * std::sin(x[2]),
                  x[2] + a * std::sin(x[0]));
    };
    c.jacobian = [a](const Vec3& x) {
      Mat3 j = Mat3::identity();
      j(0, 1) = a * std::cos(x[1]);
      j(1, 2) = a * std::cos(x[2]);
      j(2, 0) = a * std::cos(x[0]);
      return j;
    };
    c.second = [a](int i, int j, const Vec3& x) {
      if (i == 1 && j == 1) return Vec3(-a * std::sin(x[1]), 0, 0);
      if (i == 2 && j == 2) return Vec3(0, -a * std::sin(x[2]), 0);
      if (i == 0 && j == 0) return Vec3(0, 0, -a * std::sin(x[0]));
      return Vec3();
    };
    c.domain = {Vec3(0, 0, 0), Vec3(1, 1, 1)};
    return c;
  }
  throw InvalidParams("make_chart: unknown chart family '" + family + "'");
}

SurfacePatch make_patch(const std::string& family,
                        const std::vector<double>& params) {
  if (family == "plane") {
    SurfacePatch p;
    p.y0 = [](const Vec2& x) { return Vec3(x.u, x.v, 0); };
    p.dy0 = [](int al, const Vec2&) { return basis_vector(al); };
    p.d2y0 = [](int, int, const Vec2&) { return Vec3(); };
    p.domain = {Vec2(0, 0), Vec2(1, 1)};
    return p;
  }
  if (family == "tilted_plane") {
    Mat3 r0 =
        Quat::from_axis_angle(Vec3(1, 1, 0), param_or(params, 0, 0.5))
            .to_matrix();
    SurfacePatch p;
    p.y0 = [r0](const Vec2& x) { return r0 * Vec3(x.u, x.v, 0); };
    p.dy0 = [r0](int al, const Vec2&) { return r0 * basis_vector(al); };
    p.d2y0 = [](int, int, const Vec2&) { return Vec3(); };
    p.domain = {Vec2(0, 0), Vec2(1, 1)};
    return p;
  }
  if (family == "cylinder") {
    double rr = param_or(params, 0, 2.0);
    if (rr <= 0.0) throw InvalidParams("make_patch: cylinder radius <= 0");
    SurfacePatch p;
    p.y0 = [rr](const Vec2& x) {
      return Vec3(rr * std::cos(x.u), rr * std::sin(x.u), x.v);
    };
    p.dy0 = [rr](int al, const Vec2& x) {
      if (al == 0) return Vec3(-rr * std::sin(x.u), rr * std::cos(x.u), 0);
      return Vec3(0, 0, 1);
    };
    p.d2y0 = [rr](int al, int be, const Vec2& x) {
      if (al == 0 && be == 0)
        return Vec3(-rr * std::cos(x.u), -rr * std::sin(x.u), 0);
      return Vec3();
    };
    p.domain = {Vec2(0.2, 0.0), Vec2(1.2, 1.0)};
    return p;
  }
  if (family == "sphere") {
    double rr = param_or(params, 0, 1.0);
    if (rr <= 0.0) throw InvalidParams("make_patch: sphere radius <= 0");
    // Longitude/latitude parametrization; the domain stays clear of the
    // poles where the chart degenerates.
    SurfacePatch p;
    p.y0 = [rr](const Vec2& x) {
      return Vec3(rr * std::cos(x.u) * std::cos(x.v),
                  rr * std::sin(x.u) * std::cos(x.v), rr * std::sin(x.v));
    };
    p.dy0 = [rr](int al, const Vec2& x) {
      double cu = std::cos(x.u), su = std::sin(x.u);
      double cv = std::cos(x.v), sv = std::sin(x.v);
      if (al == 0) return Vec3(-rr * su * cv, rr * cu * cv, 0);
      return Vec3(-rr * cu * sv, -rr * su * sv, rr * cv);
    };
    p.d2y0 = [rr](int al, int be, const Vec2& x) {
      double cu = std::cos(x.u), su = std::sin(x.u);
      double cv = std::cos(x.v), sv = std::sin(x.v);
      if (al == 0 && be == 0) return Vec3(-rr * cu * cv, -rr * su * cv, 0);
      if (al != be) return Vec3(rr * su * sv, -rr * cu * sv, 0);
      return Vec3(-rr * cu * cv, -rr * su * cv, -rr * sv);
    };
    p.domain = {Vec2(0.2, -0.6), Vec2(1.2, 0.6)};
    return p;
  }
  if (family == "graph") {
    double a = param_or(params, 0, 0.2);
    SurfacePatch p;
    p.y0 = [a](const Vec2& x) {
      return Vec3(x.u, x.v, a * std::sin(x.u) * std::sin(x.v));
    };
    p.dy0 = [a](int al, const Vec2& x) {
      if (al == 0) return Vec3(1, 0, a * std::cos(x.u) * std::sin(x.v));
      return Vec3(0, 1, a * std::sin(x.u) * std::cos(x.v));
    };
    p.d2y0 = [a](int al, int be, const Vec2& x) {
      if (al == 0 && be == 0)
        return Vec3(0, 0, -a * std::sin(x.u) * std::sin(x.v));
      if (al != be) return Vec3(0, 0, a * std::cos(x.u) * std::cos(x.v));
      return Vec3(0, 0, -a * std::sin(x.u) * std::sin(x.v));
    };
    p.domain = {Vec2(0.2, 0.2), Vec2(2.8, 2.8)};
    return p;
  }
  throw InvalidParams("make_patch: unknown patch family '" + family + "'");
}

namespace {

// Rotation about a fixed unit axis: R(theta) = exp(theta K), K = skew(axis),
// so dR/dx_i = theta_{,i} K R.
struct AxisAngleFactor {
  Vec3 axis;
  AngleFn angle;

  Mat3 value3(const Vec3& x) const {
    return Quat::from_axis_angle(axis, angle.eval(x[angle.coord])).to_matrix();
  }
  Mat3 deriv3(int i, const Vec3& x) const {
    if (i != angle.coord) return Mat3::zero();
    return angle.deriv(x[angle.coord]) *
           (skew_from_axial(normalized(axis)) * value3(x));
  }
  Mat3 value2(const Vec2& x) const {
    return Quat::from_axis_angle(axis, angle.eval(x[angle.coord])).to_matrix();
  }
  Mat3 deriv2(int a, const Vec2& x) const {
    if (a != angle.coord) return Mat3::zero();
    return angle.deriv(x[angle.coord]) *
           (skew_from_axial(normalized(axis)) * value2(x));
  }
};

}  // namespace

MatField3 make_rotation3(const RotationSpec& spec) {
  switch (spec.kind) {
    case RotationSpec::Constant: {
      Mat3 r =
          Quat::from_axis_angle(spec.axis, spec.const_angle).to_matrix();
      return MatField3::constant(r);
    }
    case RotationSpec::AxisAngle: {
      AxisAngleFactor f{spec.axis, spec.angle};
      return {[f](const Vec3& x) { return f.value3(x); },
              [f](int i, const Vec3& x) { return f.deriv3(i, x); }};
    }
    case RotationSpec::Composed: {
      AxisAngleFactor f{spec.axis, spec.angle};
      AxisAngleFactor g{spec.axis2, spec.angle2};
      return {[f, g](const Vec3& x) { return f.value3(x) * g.value3(x); },
              [f, g](int i, const Vec3& x) {
                return f.deriv3(i, x) * g.value3(x) +
                       f.value3(x) * g.deriv3(i, x);
              }};
    }
  }
  throw InvalidParams("make_rotation3: invalid rotation kind");
}

SurfMatField make_rotation2(const RotationSpec& spec) {
  switch (spec.kind) {
    case RotationSpec::Constant: {
      Mat3 r =
          Quat::from_axis_angle(spec.axis, spec.const_angle).to_matrix();
      return SurfMatField::constant(r);
    }
    case RotationSpec::AxisAngle: {
      AxisAngleFactor f{spec.axis, spec.angle};
      return {[f](const Vec2& x) { return f.value2(x); },
              [f](int a, const Vec2& x) { return f.deriv2(a, x); }};
    }
    case RotationSpec::Composed: {
      AxisAngleFactor f{spec.axis, spec.angle};
      AxisAngleFactor g{spec.axis2, spec.angle2};
      return {[f, g](const Vec2& x) { return f.value2(x) * g.value2(x); },
              [f, g](int a, const Vec2& x) {
                return f.deriv2(a, x) * g.value2(x) +
                       f.value2(x) * g.deriv2(a, x);
              }};
    }
  }
  throw InvalidParams("make_rotation2: invalid rotation kind");
}

std::vector<std::pair<std::string, Chart3>> default_charts() {
  return {{"identity", make_chart("identity")},
          {"affine", make_chart("affine")},
          {"cylindrical", make_chart("cylindrical")},
          {"perturbed", make_chart("perturbed")}};
}

std::vector<std::pair<std::string, SurfacePatch>> default_patches() {
  return {{"plane", make_patch("plane")},
          {"tilted_plane", make_patch("tilted_plane")},
          {"cylinder", make_patch("cylinder")},
          {"sphere", make_patch("sphere")},
          {"graph", make_patch("graph")}};
}

std::vector<std::pair<std::string, RotationSpec>> default_rotation_specs() {
  RotationSpec constant;
  constant.kind = RotationSpec::Constant;
  constant.axis = normalized(Vec3(1, -1, 2));
  constant.const_angle = 0.7;

  RotationSpec linear;
  linear.kind = RotationSpec::AxisAngle;
  linear.axis = Vec3(0, 0, 1);
  linear.angle = {AngleFn::Linear, 1.2, 0};

  RotationSpec wavy;
  wavy.kind = RotationSpec::AxisAngle;
  wavy.axis = normalized(Vec3(1, 2, 2));
  wavy.angle = {AngleFn::Sin, 1.5, 1};

  RotationSpec composed;
  composed.kind = RotationSpec::Composed;
  composed.axis = Vec3(1, 0, 0);
  composed.angle = {AngleFn::Linear, 0.9, 1};
  composed.axis2 = Vec3(0, 1, 0);
  composed.angle2 = {AngleFn::Sin, 1.1, 0};

  return {{"constant", constant},
          {"axis_angle_linear", linear},
          {"axis_angle_sin", wavy},
          {"composed", composed}};
}

namespace {

// Trivariate polynomial of total degree <= 3, with analytic gradient.
struct Poly3 {
  // exponent triples (a, b, c) with a + b + c <= 3
  static constexpr int kTerms = 20;
  static constexpr int kExp[kTerms][3] = {
      {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0},
      {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2},
      {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
      {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};
  double c[kTerms] = {};

  static double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
  }

  double eval(const Vec3& x) const {
    double s = 0.0;
    for (int t = 0; t < kTerms; ++t)
      s += c[t] * ipow(x[0], kExp[t][0]) * ipow(x[1], kExp[t][1]) *
           ipow(x[2], kExp[t][2]);
    return s;
  }

  double deriv(int i, const Vec3& x) const {
    double s = 0.0;
    for (int t = 0; t < kTerms; ++t) {
      int e[3] = {kExp[t][0], kExp[t][1], kExp[t][2]};
      if (e[i] == 0) continue;
      double f = c[t] * e[i];
      e[i] -= 1;
      s += f * ipow(x[0], e[0]) * ipow(x[1], e[1]) * ipow(x[2], e[2]);
    }
    return s;
  }

  static Poly3 random(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    Poly3 p;
    for (double& ci : p.c) ci = u(rng);
    return p;
  }
};

constexpr int Poly3::kExp[Poly3::kTerms][3];

// Bivariate polynomial of total degree <= 3.
struct Poly2 {
  static constexpr int kTerms = 10;
  static constexpr int kExp[kTerms][2] = {{0, 0}, {1, 0}, {0, 1}, {2, 0},
                                          {1, 1}, {0, 2}, {3, 0}, {2, 1},
                                          {1, 2}, {0, 3}};
  double c[kTerms] = {};

  double eval(const Vec2& x) const {
    double s = 0.0;
    for (int t = 0; t < kTerms; ++t)
      s += c[t] * Poly3::ipow(x.u, kExp[t][0]) * Poly3::ipow(x.v, kExp[t][1]);
    return s;
  }

  double deriv(int a, const Vec2& x) const {
    double s = 0.0;
    for (int t = 0; t < kTerms; ++t) {
      int e[2] = {kExp[t][0], kExp[t][1]};
      if (e[a] == 0) continue;
      double f = c[t] * e[a];
      e[a] -= 1;
      s += f * Poly3::ipow(x.u, e[0]) * Poly3::ipow(x.v, e[1]);
    }
    return s;
  }

  static Poly2 random(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    Poly2 p;
    for (double& ci : p.c) ci = u(rng);
    return p;
  }
};

constexpr int Poly2::kExp[Poly2::kTerms][2];

}  // namespace

ScalarField3 random_poly_scalar3(std::mt19937& rng) {
  Poly3 p = Poly3::random(rng);
  return {[p](const Vec3& x) { return p.eval(x); },
          [p](int i, const Vec3& x) { return p.deriv(i, x); }};
}

VecField3 random_poly_vec3(std::mt19937& rng) {
  std::array<Poly3, 3> p{Poly3::random(rng), Poly3::random(rng),
                         Poly3::random(rng)};
  return {[p](const Vec3& x) {
            return Vec3(p[0].eval(x), p[1].eval(x), p[2].eval(x));
          },
          [p](int i, const Vec3& x) {
            return Vec3(p[0].deriv(i, x), p[1].deriv(i, x), p[2].deriv(i, x));
          }};
}

MatField3 random_poly_mat3(std::mt19937& rng) {
  std::array<Poly3, 9> p;
  for (auto& pi : p) pi = Poly3::random(rng);
  return {[p](const Vec3& x) {
            Mat3 m;
            for (int i = 0; i < 3; ++i)
              for (int j = 0; j < 3; ++j) m(i, j) = p[3 * i + j].eval(x);
            return m;
          },
          [p](int k, const Vec3& x) {
            Mat3 m;
            for (int i = 0; i < 3; ++i)
              for (int j = 0; j < 3; ++j) m(i, j) = p[3 * i + j].deriv(k, x);
            return m;
          }};
}

ScalarField2 random_poly_scalar2(std::mt19937& rng) {
  Poly2 p = Poly2::random(rng);
  return {[p](const Vec2& x) { return p.eval(x); },
          [p](int a, const Vec2& x) { return p.deriv(a, x); }};
}

SurfVecField random_poly_vec2(std::mt19937& rng) {
  std::array<Poly2, 3> p{Poly2::random(rng), Poly2::random(rng),
                         Poly2::random(rng)};
  return {[p](const Vec2& x) {
            return Vec3(p[0].eval(x), p[1].eval(x), p[2].eval(x));
          },
          [p](int a, const Vec2& x) {
            return Vec3(p[0].deriv(a, x), p[1].deriv(a, x), p[2].deriv(a, x));
          }};
}

SurfMatField random_poly_mat2(std::mt19937& rng) {
  std::array<Poly2, 9> p;
  for (auto& pi : p) pi = Poly2::random(rng);
  return {[p](const Vec2& x) {
            Mat3 m;
            for (int i = 0; i < 3; ++i)
              for (int j = 0; j < 3; ++j) m(i, j) = p[3 * i + j].eval(x);
            return m;
          },
          [p](int a, const Vec2& x) {
            Mat3 m;
            for (int i = 0; i < 3; ++i)
              for (int j = 0; j < 3; ++j) m(i, j) = p[3 * i + j].deriv(a, x);
            return m;
          }};
}

Vec3 random_interior_point(const Box3& box, std::mt19937& rng,
                           double margin_frac) {
  std::uniform_real_distribution<double> u(margin_frac, 1.0 - margin_frac);
  Vec3 x;
  for (int i = 0; i < 3; ++i)
    x[i] = box.lo[i] + u(rng) * (box.hi[i] - box.lo[i]);
  return x;
}

Vec2 random_interior_point(const Box2& box, std::mt19937& rng,
                           double margin_frac) {
  std::uniform_real_distribution<double> u(margin_frac, 1.0 - margin_frac);
  return {box.lo.u + u(rng) * (box.hi.u - box.lo.u),
          box.lo.v + u(rng) * (box.hi.v - box.lo.v)};
}

Mat3 random_rotation(std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Quat q(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
  return q.normalized().to_matrix();
}

}  // namespace cosserat::catalog
