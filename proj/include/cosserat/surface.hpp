#pragma once

#include <functional>

#include "cosserat/field.hpp"
#include "cosserat/tensor.hpp"

namespace cosserat {

// Parametrized surface patch y0 : omega subset R^2 -> R^3 with optional
// analytic first and second partials.
struct SurfacePatch {
  std::function<Vec3(const Vec2&)> y0;
  std::function<Vec3(int, const Vec2&)> dy0;        // a_alpha
  std::function<Vec3(int, int, const Vec2&)> d2y0;  // y0_{,alpha beta}
  Box2 domain{Vec2(0, 0), Vec2(1, 1)};

  Vec3 base_vector(int alpha, const Vec2& x) const;
  Vec3 base_vector_deriv(int alpha, int beta, const Vec2& x) const;
};

// Pointwise surface geometry: tangent bases, normal, fundamental
// tensors, alternator, surface Christoffel symbols.
struct SurfaceFrames {
  Vec3 a_lo[2];   // a_alpha
  Vec3 a_up[2];   // a^beta
  Vec3 n0;        // a_3 = a^3
  double metric_lo[2][2];  // a_{alpha beta}
  double metric_up[2][2];  // a^{alpha beta}
  double area = 0.0;       // a = |a_1 x a_2|
  Mat3 first;        // first fundamental tensor (tangent-plane identity)
  Mat3 second;       // second fundamental tensor b
  Mat3 alternator;   // c = -n0 x a
  double b_lo[2][2];   // b_{alpha beta}
  double b_mix[2][2];  // b^alpha_beta
  double christoffel[2][2][2] = {};  // [gamma][alpha][beta]

  double eps_up(int al, int be) const {
    return (al == be) ? 0.0 : (al == 0 ? 1.0 : -1.0) / area;
  }
  double eps_lo(int al, int be) const {
    return (al == be) ? 0.0 : (al == 0 ? 1.0 : -1.0) * area;
  }

  // base vector a_i / a^i with a_3 = a^3 = n0
  Vec3 base_lo(int i) const { return i < 2 ? a_lo[i] : n0; }
  Vec3 base_up(int i) const { return i < 2 ? a_up[i] : n0; }
};

SurfaceFrames surf_frames(const SurfacePatch& patch, const Vec2& x);

// Grad_s v = v_{,alpha} (x) a^alpha ; Div_s v = tr(Grad_s v)
Mat3 grad_s(const SurfVecField& v, const SurfacePatch& patch, const Vec2& x);
double div_s(const SurfVecField& v, const SurfacePatch& patch, const Vec2& x);

// curl_s v = -v_{,alpha} x a^alpha, and the covariant-component route.
Vec3 curl_s_vec(const SurfVecField& v, const SurfacePatch& patch,
                const Vec2& x);
Vec3 curl_s_vec_components(const SurfVecField& v, const SurfacePatch& patch,
                           const Vec2& x);

enum class SurfCurlRoute {
  Direct,         // -T_{,alpha} x a^alpha
  CovariantComp,  // covariant components T_{ij}
  MixedComp,      // mixed components T^i_{.j}
  RowsCovariant,  // rows T_i = T^T a_i, carrier a^i
  RowsMixed       // rows T^i = T^T a^i, carrier a_i
};

Mat3 curl_s_tensor(const SurfMatField& t, const SurfacePatch& patch,
                   const Vec2& x, SurfCurlRoute route = SurfCurlRoute::Direct);

// T_{,gamma} reassembled from surface covariant component derivatives;
// matches the FD derivative of the invariant field.
Mat3 surf_covariant_tensor_deriv(const SurfMatField& t,
                                 const SurfacePatch& patch, const Vec2& x,
                                 int gamma);
Vec3 surf_covariant_vector_deriv(const SurfVecField& v,
                                 const SurfacePatch& patch, const Vec2& x,
                                 int alpha);

}  // namespace cosserat
