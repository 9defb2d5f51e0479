#pragma once

#include <array>

#include "cosserat/chart.hpp"
#include "cosserat/curl3d.hpp"
#include "cosserat/field.hpp"

namespace cosserat {

// Deformation + microrotation data of a 3D Cosserat body over a chart.
// Q0 defaults to the constant identity (initial directors = e_i).
struct Config3D {
  Chart3 chart;
  VecField3 phi;
  MatField3 Qe;
  MatField3 Q0 = MatField3::constant(Mat3::identity());
};

struct Measures3D {
  Mat3 F;
  Mat3 Ue;      // Qe^T F
  Mat3 Ee;      // Ue - 1
  Mat3 wryness;
  Mat3 dislocation;
  std::array<Vec3, 3> omega;
};

enum class WrynessRoute {
  AxlGradient,  // axl(Qe^T Qe,i) (x) g^i
  Directors,    // 1/2 e_{jks} (d_{j,i}.d_k - d0_{j,i}.d0_k) d0_s (x) g^i
  Omega         // 1/2 [Qe^T (d_j x d_{j,i}) - d0_j x d0_{j,i}] (x) g^i
};

enum class DislocationRoute {
  Curl,      // Qe^T Curl Qe
  Directors  // e_{krs} (d_{j,i}.d_k - d0_{j,i}.d0_k)(g^i.d0_r) d0_j (x) d0_s
};

// SO(3) drift tolerance before NotARotation; fields are not silently
// re-orthonormalized.
inline constexpr double kRotationDriftTol = 1e-8;

Mat3 deformation_gradient(const Config3D& cfg, const Vec3& x);

struct StrainMeasures {
  Mat3 Ue;
  Mat3 Ee;
};
StrainMeasures strain_measures(const Config3D& cfg, const Vec3& x);

// Director-component form of the strain tensor,
// (phi_{,j}.d_i - g_j.d0_i) d0_i (x) g^j.
Mat3 strain_director_form(const Config3D& cfg, const Vec3& x);

Mat3 wryness(const Config3D& cfg, const Vec3& x,
             WrynessRoute route = WrynessRoute::AxlGradient);

Mat3 dislocation_density(const Config3D& cfg, const Vec3& x,
                         DislocationRoute route = DislocationRoute::Curl);

std::array<Vec3, 3> omega_vectors(const Config3D& cfg, const Vec3& x,
                                  bool director_route = false);

// Residuals of Nye's formula and its inverse:
// |D + Gamma^T - tr(Gamma) 1| and |Gamma + D^T - 1/2 tr(D) 1|.
struct NyeResiduals {
  double forward;
  double inverse;
};
NyeResiduals nye_check(const Mat3& gamma, const Mat3& d);

Measures3D measures_at(const Config3D& cfg, const Vec3& x);

}  // namespace cosserat
