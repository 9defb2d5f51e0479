#pragma once

#include <array>

#include "cosserat/rotation.hpp"
#include "cosserat/surface.hpp"

namespace cosserat {

// 6-parameter shell configuration: reference midsurface, deformation m,
// elastic microrotation Qe and initial microrotation Q0. The default Q0
// is the polar factor of the surface frame, so d0_3 = n0.
struct ShellConfig {
  SurfacePatch patch;
  SurfVecField m;
  SurfMatField Qe;
  SurfMatField Q0;

  static ShellConfig with_default_q0(SurfacePatch patch, SurfVecField m,
                                     SurfMatField qe);
};

// Q0 = polar(a_i (x) e_i); maps e_3 to the unit normal.
Rot3 default_initial_rotation(const SurfacePatch& patch, const Vec2& x);
SurfMatField default_initial_rotation_field(const SurfacePatch& patch);

enum class BendingRoute {
  AxlGradient,  // axl(Qe^T Qe,alpha) (x) a^alpha
  Components,   // 1/2 e_{ijk} (d_{j,alpha}.d_k - d0_{j,alpha}.d0_k) d0_i (x) a^alpha
  Directors,    // 1/2 [Qe^T (d_i x d_{i,alpha}) - d0_i x d0_{i,alpha}] (x) a^alpha
  Omega         // Qe^T omega with Qe,alpha = omega_alpha x Qe
};

enum class ShellDislocationRoute {
  SurfaceCurl,  // Qe^T Curl_s Qe
  CrossProduct, // -(Qe^T Qe,alpha) x a^alpha
  Directors     // e_{jk beta}(d_{i,alpha}.d_k - ...)(a^alpha.d0_beta) d0_i (x) d0_j
};

Mat3 shell_strain(const ShellConfig& cfg, const Vec2& x);
Mat3 shell_strain_director_form(const ShellConfig& cfg, const Vec2& x);

Mat3 shell_bending_curvature(const ShellConfig& cfg, const Vec2& x,
                             BendingRoute route = BendingRoute::AxlGradient);

Mat3 shell_dislocation(const ShellConfig& cfg, const Vec2& x,
                       ShellDislocationRoute route =
                           ShellDislocationRoute::SurfaceCurl);

// Residuals of the shell Nye relation plus the derived identity bundle.
struct ShellNyeReport {
  double forward;   // |De + Ke^T - tr(Ke) 1|
  double inverse;   // |Ke + De^T - 1/2 tr(De) 1|
  double trace_identity;     // |tr De - 2 tr Ke|
  double skew_identity;      // |skew De - skew Ke|
  double devsym_identity;    // |dev3 sym De + dev3 sym Ke|
  double norm_identity;      // | |De|^2 - |Ke|^2 - (tr Ke)^2 |
  double lower_bound_slack;  // max(0, |Ke| - |De|)
  double upper_bound_slack;  // max(0, |De| - 2 |Ke|)
};
ShellNyeReport shell_nye(const Mat3& ke, const Mat3& de);

// Planar (tangent-plane supported) second-order tensor with its carrier
// frames; mixed components S^alpha_{.beta} on {a_alpha (x) a^beta}.
struct PlanarTensor {
  Mat3 tensor;
  SurfaceFrames frames;

  // 2x2 mixed components S^alpha_{.beta}
  std::array<std::array<double, 2>, 2> mixed_components() const;
  double det2() const;
};

// T(S) = -S^T + tr(S) a ; an involution, equal to -c S c and, for
// invertible S, to det2(S) S^{-T} (the planar cofactor).
PlanarTensor transform_T(const PlanarTensor& s);
Mat3 transform_T_alternator(const PlanarTensor& s);  // -c S c
// cofactor of the mixed component matrix, reassembled on {a^alpha (x) a_beta}
Mat3 transform_T_cofactor(const PlanarTensor& s);
// det2(S) S^{-T} with the planar inverse; requires |det2| > threshold
Mat3 transform_T_inverse(const PlanarTensor& s, double det_threshold = 1e-12);

struct PlanarSplit {
  Mat3 d_planar;        // De a
  double d_a3[2];       // components on a^alpha (x) n0
  double trace_part;    // 1/2 tr De
  Mat3 k_planar;        // a Ke
  double k_3a[2];       // K_{3 alpha}
  double reassembly_residual;   // Eq. of the split structure
  double mixed_residual;        // |D_{alpha 3} + K_{3 alpha}|
  double normal_action_residual;  // |n0 De - 1/2 tr(De) n0|
};
PlanarSplit planar_split(const Mat3& de, const Mat3& ke,
                         const SurfaceFrames& frames,
                         double nye_tol = 1e-6);

struct CofactorCheck {
  double planar_residual;      // |D_par - T(K_par)|
  double reassembly_residual;  // full structural reassembly of De from Ke
};
CofactorCheck planar_cofactor_check(const Mat3& ke, const Mat3& de,
                                    const SurfaceFrames& frames,
                                    double nye_tol = 1e-6);

}  // namespace cosserat
