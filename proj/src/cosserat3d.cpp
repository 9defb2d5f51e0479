#include "cosserat/cosserat3d.hpp"

#include "cosserat/errors.hpp"
#include "cosserat/rotation.hpp"

namespace cosserat {

namespace {

void check_rotation(const Mat3& q, const char* who) {
  if (rotation_defect(q) > kRotationDriftTol || det(q) <= 0.0)
    throw NotARotation(std::string(who) +
                       ": sampled rotation drifted from SO(3)");
}

struct DirectorData {
  Vec3 d0[3];        // d0_i = Q0 e_i
  Vec3 d[3];         // d_i = Qe Q0 e_i
  Vec3 d0_d[3][3];   // [i][j] = d0_{i,j}
  Vec3 d_d[3][3];    // [i][j] = d_{i,j}
};

DirectorData directors_at(const Config3D& cfg, const Vec3& x) {
  DirectorData dd;
  Mat3 q0 = cfg.Q0(x);
  Mat3 qe = cfg.Qe(x);
  Mat3 rbar = qe * q0;
  for (int i = 0; i < 3; ++i) {
    dd.d0[i] = q0.col(i);
    dd.d[i] = rbar.col(i);
  }
  for (int j = 0; j < 3; ++j) {
    Mat3 q0j = cfg.Q0.deriv(j, x);
    Mat3 qej = cfg.Qe.deriv(j, x);
    Mat3 rbarj = qej * q0 + qe * q0j;
    for (int i = 0; i < 3; ++i) {
      dd.d0_d[i][j] = q0j.col(i);
      dd.d_d[i][j] = rbarj.col(i);
    }
  }
  return dd;
}

}  // namespace

Mat3 deformation_gradient(const Config3D& cfg, const Vec3& x) {
  ChartFrames f = frames_at(cfg.chart, x);
  Mat3 r;
  for (int i = 0; i < 3; ++i) r += dyad(cfg.phi.deriv(i, x), f.g_up[i]);
  return r;
}

StrainMeasures strain_measures(const Config3D& cfg, const Vec3& x) {
  Mat3 qe = cfg.Qe(x);
  check_rotation(qe, "strain_measures");
  StrainMeasures s;
  s.Ue = transpose(qe) * deformation_gradient(cfg, x);
  s.Ee = s.Ue - Mat3::identity();
  return s;
}

Mat3 strain_director_form(const Config3D& cfg, const Vec3& x) {
  ChartFrames f = frames_at(cfg.chart, x);
  DirectorData dd = directors_at(cfg, x);
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double c = dot(cfg.phi.deriv(j, x), dd.d[i]) - dot(f.g_lo[j], dd.d0[i]);
      r += c * dyad(dd.d0[i], f.g_up[j]);
    }
  return r;
}

Mat3 wryness(const Config3D& cfg, const Vec3& x, WrynessRoute route) {
  ChartFrames f = frames_at(cfg.chart, x);
  Mat3 qe = cfg.Qe(x);
  check_rotation(qe, "wryness");

  switch (route) {
    case WrynessRoute::AxlGradient: {
      Mat3 qet = transpose(qe);
      Mat3 r;
      for (int i = 0; i < 3; ++i) {
        Mat3 s = qet * cfg.Qe.deriv(i, x);
        r += dyad(axl_unchecked(skew(s)), f.g_up[i]);
      }
      return r;
    }
    case WrynessRoute::Directors: {
      DirectorData dd = directors_at(cfg, x);
      Mat3 r;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            for (int s = 0; s < 3; ++s) {
              double e = levi_civita(j, k, s);
              if (e == 0.0) continue;
              double c = dot(dd.d_d[j][i], dd.d[k]) -
                         dot(dd.d0_d[j][i], dd.d0[k]);
              r += (0.5 * e * c) * dyad(dd.d0[s], f.g_up[i]);
            }
      return r;
    }
    case WrynessRoute::Omega: {
      DirectorData dd = directors_at(cfg, x);
      Mat3 qet = transpose(qe);
      Mat3 r;
      for (int i = 0; i < 3; ++i) {
        Vec3 s1, s2;
        for (int j = 0; j < 3; ++j) {
          s1 += cross(dd.d[j], dd.d_d[j][i]);
          s2 += cross(dd.d0[j], dd.d0_d[j][i]);
        }
        r += dyad(0.5 * (qet * s1 - s2), f.g_up[i]);
      }
      return r;
    }
  }
  return {};
}

Mat3 dislocation_density(const Config3D& cfg, const Vec3& x,
                         DislocationRoute route) {
  Mat3 qe = cfg.Qe(x);
  check_rotation(qe, "dislocation_density");

  if (route == DislocationRoute::Curl)
    return transpose(qe) * curl_tensor(cfg.Qe, cfg.chart, x);

  ChartFrames f = frames_at(cfg.chart, x);
  DirectorData dd = directors_at(cfg, x);
  Mat3 r;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) {
        double c =
            dot(dd.d_d[j][i], dd.d[k]) - dot(dd.d0_d[j][i], dd.d0[k]);
        if (c == 0.0) continue;
        for (int rr = 0; rr < 3; ++rr)
          for (int s = 0; s < 3; ++s) {
            double e = levi_civita(k, rr, s);
            if (e == 0.0) continue;
            r += (e * c * dot(f.g_up[i], dd.d0[rr])) *
                 dyad(dd.d0[j], dd.d0[s]);
          }
      }
  return r;
}

std::array<Vec3, 3> omega_vectors(const Config3D& cfg, const Vec3& x,
                                  bool director_route) {
  Mat3 qe = cfg.Qe(x);
  check_rotation(qe, "omega_vectors");
  std::array<Vec3, 3> w;

  if (!director_route) {
    // omega_i = axl(Qe,i Qe^T)
    for (int i = 0; i < 3; ++i)
      w[i] = axl_unchecked(skew(cfg.Qe.deriv(i, x) * transpose(qe)));
    return w;
  }

  DirectorData dd = directors_at(cfg, x);
  for (int i = 0; i < 3; ++i) {
    Vec3 s1, s2;
    for (int j = 0; j < 3; ++j) {
      s1 += cross(dd.d[j], dd.d_d[j][i]);
      s2 += cross(dd.d0[j], dd.d0_d[j][i]);
    }
    w[i] = 0.5 * (s1 - qe * s2);
  }
  return w;
}

NyeResiduals nye_check(const Mat3& gamma, const Mat3& d) {
  NyeResiduals r;
  r.forward = norm(d + transpose(gamma) - trace(gamma) * Mat3::identity());
  r.inverse = norm(gamma + transpose(d) - 0.5 * trace(d) * Mat3::identity());
  return r;
}

Measures3D measures_at(const Config3D& cfg, const Vec3& x) {
  Measures3D m;
  m.F = deformation_gradient(cfg, x);
  StrainMeasures s = strain_measures(cfg, x);
  m.Ue = s.Ue;
  m.Ee = s.Ee;
  m.wryness = wryness(cfg, x);
  m.dislocation = dislocation_density(cfg, x);
  m.omega = omega_vectors(cfg, x);
  return m;
}

}  // namespace cosserat
