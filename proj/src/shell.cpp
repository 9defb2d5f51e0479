#include "cosserat/shell.hpp"

#include <cmath>

#include "cosserat/errors.hpp"

namespace cosserat {

namespace {

void check_rotation_2d(const Mat3& q, const char* who) {
  if (rotation_defect(q) > 1e-8 || det(q) <= 0.0)
    throw NotARotation(std::string(who) +
                       ": sampled rotation drifted from SO(3)");
}

struct ShellDirectors {
  Vec3 d0[3];
  Vec3 d[3];
  Vec3 d0_d[3][2];  // d0_{i,alpha}
  Vec3 d_d[3][2];   // d_{i,alpha}
};

ShellDirectors directors_at(const ShellConfig& cfg, const Vec2& x) {
  ShellDirectors dd;
  Mat3 q0 = cfg.Q0(x);
  Mat3 qe = cfg.Qe(x);
  Mat3 rbar = qe * q0;
  for (int i = 0; i < 3; ++i) {
    dd.d0[i] = q0.col(i);
    dd.d[i] = rbar.col(i);
  }
  for (int al = 0; al < 2; ++al) {
    Mat3 q0a = cfg.Q0.deriv(al, x);
    Mat3 qea = cfg.Qe.deriv(al, x);
    Mat3 rbara = qea * q0 + qe * q0a;
    for (int i = 0; i < 3; ++i) {
      dd.d0_d[i][al] = q0a.col(i);
      dd.d_d[i][al] = rbara.col(i);
    }
  }
  return dd;
}

}  // namespace

Rot3 default_initial_rotation(const SurfacePatch& patch, const Vec2& x) {
  SurfaceFrames f = surf_frames(patch, x);
  return polar_factor(Mat3::from_cols(f.a_lo[0], f.a_lo[1], f.n0));
}

SurfMatField default_initial_rotation_field(const SurfacePatch& patch) {
  SurfMatField q0;
  q0.value = [patch](const Vec2& x) {
    return default_initial_rotation(patch, x).matrix();
  };
  return q0;
}

ShellConfig ShellConfig::with_default_q0(SurfacePatch patch, SurfVecField m,
                                         SurfMatField qe) {
  SurfMatField q0 = default_initial_rotation_field(patch);
  return ShellConfig{std::move(patch), std::move(m), std::move(qe),
                     std::move(q0)};
}

Mat3 shell_strain(const ShellConfig& cfg, const Vec2& x) {
  SurfaceFrames f = surf_frames(cfg.patch, x);
  Mat3 qe = cfg.Qe(x);
  check_rotation_2d(qe, "shell_strain");
  Mat3 grad;
  for (int al = 0; al < 2; ++al) grad += dyad(cfg.m.deriv(al, x), f.a_up[al]);
  return transpose(qe) * grad - f.first;
}

Mat3 shell_strain_director_form(const ShellConfig& cfg, const Vec2& x) {
  SurfaceFrames f = surf_frames(cfg.patch, x);
  ShellDirectors dd = directors_at(cfg, x);
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int al = 0; al < 2; ++al) {
      double c =
          dot(cfg.m.deriv(al, x), dd.d[i]) - dot(f.a_lo[al], dd.d0[i]);
      r += c * dyad(dd.d0[i], f.a_up[al]);
    }
  return r;
}

Mat3 shell_bending_curvature(const ShellConfig& cfg, const Vec2& x,
                             BendingRoute route) {
  SurfaceFrames f = surf_frames(cfg.patch, x);
  Mat3 qe = cfg.Qe(x);
  check_rotation_2d(qe, "shell_bending_curvature");

  switch (route) {
    case BendingRoute::AxlGradient: {
      Mat3 qet = transpose(qe);
      Mat3 r;
      for (int al = 0; al < 2; ++al) {
        Mat3 s = qet * cfg.Qe.deriv(al, x);
        r += dyad(axl_unchecked(skew(s)), f.a_up[al]);
      }
      return r;
    }
    case BendingRoute::Components: {
      ShellDirectors dd = directors_at(cfg, x);
      Mat3 r;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) {
            double e = levi_civita(i, j, k);
            if (e == 0.0) continue;
            for (int al = 0; al < 2; ++al) {
              double c = dot(dd.d_d[j][al], dd.d[k]) -
                         dot(dd.d0_d[j][al], dd.d0[k]);
              r += (0.5 * e * c) * dyad(dd.d0[i], f.a_up[al]);
            }
          }
      return r;
    }
    case BendingRoute::Directors: {
      ShellDirectors dd = directors_at(cfg, x);
      Mat3 qet = transpose(qe);
      Mat3 r;
      for (int al = 0; al < 2; ++al) {
        Vec3 s1, s2;
        for (int i = 0; i < 3; ++i) {
          s1 += cross(dd.d[i], dd.d_d[i][al]);
          s2 += cross(dd.d0[i], dd.d0_d[i][al]);
        }
        r += dyad(0.5 * (qet * s1 - s2), f.a_up[al]);
      }
      return r;
    }
    case BendingRoute::Omega: {
      Mat3 omega;
      for (int al = 0; al < 2; ++al) {
        Vec3 wa = axl_unchecked(skew(cfg.Qe.deriv(al, x) * transpose(qe)));
        omega += dyad(wa, f.a_up[al]);
      }
      return transpose(qe) * omega;
    }
  }
  return {};
}

Mat3 shell_dislocation(const ShellConfig& cfg, const Vec2& x,
                       ShellDislocationRoute route) {
  Mat3 qe = cfg.Qe(x);
  check_rotation_2d(qe, "shell_dislocation");

  if (route == ShellDislocationRoute::SurfaceCurl)
    return transpose(qe) *
           curl_s_tensor(cfg.Qe, cfg.patch, x, SurfCurlRoute::Direct);

  SurfaceFrames f = surf_frames(cfg.patch, x);
  if (route == ShellDislocationRoute::CrossProduct) {
    Mat3 qet = transpose(qe);
    Mat3 r;
    for (int al = 0; al < 2; ++al)
      r -= tensor_cross_vector(qet * cfg.Qe.deriv(al, x), f.a_up[al]);
    return r;
  }

  ShellDirectors dd = directors_at(cfg, x);
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int al = 0; al < 2; ++al) {
        double c =
            dot(dd.d_d[i][al], dd.d[k]) - dot(dd.d0_d[i][al], dd.d0[k]);
        if (c == 0.0) continue;
        for (int be = 0; be < 2; ++be)
          for (int j = 0; j < 3; ++j) {
            double e = levi_civita(j, k, be);
            if (e == 0.0) continue;
            r += (e * c * dot(f.a_up[al], dd.d0[be])) *
                 dyad(dd.d0[i], dd.d0[j]);
          }
      }
  return r;
}

ShellNyeReport shell_nye(const Mat3& ke, const Mat3& de) {
  ShellNyeReport rep;
  Mat3 id = Mat3::identity();
  rep.forward = norm(de + transpose(ke) - trace(ke) * id);
  rep.inverse = norm(ke + transpose(de) - 0.5 * trace(de) * id);
  rep.trace_identity = std::fabs(trace(de) - 2.0 * trace(ke));
  rep.skew_identity = norm(skew(de) - skew(ke));
  SplitParts pd = split(de), pk = split(ke);
  rep.devsym_identity = norm(pd.dev3sym + pk.dev3sym);
  double nd = norm(de), nk = norm(ke), tk = trace(ke);
  rep.norm_identity = std::fabs(nd * nd - nk * nk - tk * tk);
  rep.lower_bound_slack = std::max(0.0, nk - nd);
  rep.upper_bound_slack = std::max(0.0, nd - 2.0 * nk);
  return rep;
}

std::array<std::array<double, 2>, 2> PlanarTensor::mixed_components() const {
  std::array<std::array<double, 2>, 2> c{};
  for (int al = 0; al < 2; ++al)
    for (int be = 0; be < 2; ++be)
      c[al][be] = dot(frames.a_up[al], tensor * frames.a_lo[be]);
  return c;
}

double PlanarTensor::det2() const {
  auto c = mixed_components();
  return c[0][0] * c[1][1] - c[0][1] * c[1][0];
}

PlanarTensor transform_T(const PlanarTensor& s) {
  return {-transpose(s.tensor) + trace(s.tensor) * s.frames.first, s.frames};
}

Mat3 transform_T_alternator(const PlanarTensor& s) {
  return -1.0 * (s.frames.alternator * s.tensor * s.frames.alternator);
}

Mat3 transform_T_cofactor(const PlanarTensor& s) {
  auto c = s.mixed_components();
  const SurfaceFrames& f = s.frames;
  return c[1][1] * dyad(f.a_up[0], f.a_lo[0]) -
         c[1][0] * dyad(f.a_up[0], f.a_lo[1]) -
         c[0][1] * dyad(f.a_up[1], f.a_lo[0]) +
         c[0][0] * dyad(f.a_up[1], f.a_lo[1]);
}

Mat3 transform_T_inverse(const PlanarTensor& s, double det_threshold) {
  auto c = s.mixed_components();
  double d2 = c[0][0] * c[1][1] - c[0][1] * c[1][0];
  if (std::fabs(d2) <= det_threshold)
    throw Degenerate("transform_T_inverse: planar tensor nearly singular");
  double inv[2][2] = {{c[1][1] / d2, -c[0][1] / d2},
                      {-c[1][0] / d2, c[0][0] / d2}};
  const SurfaceFrames& f = s.frames;
  Mat3 sinv;
  for (int al = 0; al < 2; ++al)
    for (int be = 0; be < 2; ++be)
      sinv += inv[al][be] * dyad(f.a_lo[al], f.a_up[be]);
  return d2 * transpose(sinv);
}

PlanarSplit planar_split(const Mat3& de, const Mat3& ke,
                         const SurfaceFrames& frames, double nye_tol) {
  Mat3 id = Mat3::identity();
  if (norm(de + transpose(ke) - trace(ke) * id) > nye_tol)
    throw NyeViolated("planar_split: inputs do not satisfy the shell Nye relation");

  PlanarSplit ps;
  ps.d_planar = de * frames.first;
  ps.k_planar = frames.first * ke;
  ps.trace_part = 0.5 * trace(de);
  Vec3 de_n = de * frames.n0;
  for (int al = 0; al < 2; ++al) {
    ps.d_a3[al] = dot(frames.a_lo[al], de_n);
    ps.k_3a[al] = dot(frames.n0, ke * frames.a_lo[al]);
  }

  Mat3 rebuilt = ps.d_planar + ps.trace_part * dyad(frames.n0, frames.n0);
  for (int al = 0; al < 2; ++al)
    rebuilt += ps.d_a3[al] * dyad(frames.a_up[al], frames.n0);
  ps.reassembly_residual = norm(de - rebuilt);
  ps.mixed_residual = std::hypot(ps.d_a3[0] + ps.k_3a[0],
                                 ps.d_a3[1] + ps.k_3a[1]);
  ps.normal_action_residual =
      norm(transpose(de) * frames.n0 - ps.trace_part * frames.n0);
  return ps;
}

CofactorCheck planar_cofactor_check(const Mat3& ke, const Mat3& de,
                                    const SurfaceFrames& frames,
                                    double nye_tol) {
  PlanarSplit ps = planar_split(de, ke, frames, nye_tol);
  PlanarTensor k_par{ps.k_planar, frames};
  Mat3 cof_k = transform_T(k_par).tensor;

  CofactorCheck cc;
  cc.planar_residual = norm(ps.d_planar - cof_k);
  Mat3 rebuilt = cof_k + trace(ps.k_planar) * dyad(frames.n0, frames.n0);
  for (int al = 0; al < 2; ++al)
    rebuilt -= ps.k_3a[al] * dyad(frames.a_up[al], frames.n0);
  cc.reassembly_residual = norm(de - rebuilt);
  return cc;
}

}  // namespace cosserat
