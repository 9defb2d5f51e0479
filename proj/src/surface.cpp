#include "cosserat/surface.hpp"

#include <cmath>

#include "cosserat/errors.hpp"

namespace cosserat {

Vec3 SurfacePatch::base_vector(int alpha, const Vec2& x) const {
  if (dy0) return dy0(alpha, x);
  double h = fd_step(norm(x));
  Vec2 xp = x, xm = x;
  xp[alpha] += h;
  xm[alpha] -= h;
  return (y0(xp) - y0(xm)) * (0.5 / h);
}

Vec3 SurfacePatch::base_vector_deriv(int alpha, int beta, const Vec2& x) const {
  if (d2y0) return d2y0(alpha, beta, x);
  if (dy0) {
    double h = fd_step(norm(x));
    Vec2 xp = x, xm = x;
    xp[beta] += h;
    xm[beta] -= h;
    return (dy0(alpha, xp) - dy0(alpha, xm)) * (0.5 / h);
  }
  double h = std::pow(2.2e-16, 0.25) * std::max(1.0, norm(x));
  Vec2 xpp = x, xpm = x, xmp = x, xmm = x;
  xpp[alpha] += h;
  xpp[beta] += h;
  xpm[alpha] += h;
  xpm[beta] -= h;
  xmp[alpha] -= h;
  xmp[beta] += h;
  xmm[alpha] -= h;
  xmm[beta] -= h;
  return (y0(xpp) - y0(xpm) - y0(xmp) + y0(xmm)) * (0.25 / (h * h));
}

SurfaceFrames surf_frames(const SurfacePatch& patch, const Vec2& x) {
  double margin = patch.dy0 ? 0.0 : 2.0 * fd_step(norm(x));
  if (!patch.domain.contains(x, margin))
    throw OutOfDomain("surf_frames: point outside patch domain (FD margin)");

  SurfaceFrames f;
  for (int al = 0; al < 2; ++al) f.a_lo[al] = patch.base_vector(al, x);

  Vec3 w = cross(f.a_lo[0], f.a_lo[1]);
  f.area = norm(w);
  if (f.area <= 1e-12)
    throw DegenerateSurface("surf_frames: |a_1 x a_2| <= 1e-12");
  f.n0 = w / f.area;

  for (int al = 0; al < 2; ++al)
    for (int be = 0; be < 2; ++be)
      f.metric_lo[al][be] = dot(f.a_lo[al], f.a_lo[be]);
  double d = f.area * f.area;  // det(a_{alpha beta})
  f.metric_up[0][0] = f.metric_lo[1][1] / d;
  f.metric_up[1][1] = f.metric_lo[0][0] / d;
  f.metric_up[0][1] = f.metric_up[1][0] = -f.metric_lo[0][1] / d;

  for (int al = 0; al < 2; ++al) {
    f.a_up[al] = f.metric_up[al][0] * f.a_lo[0] + f.metric_up[al][1] * f.a_lo[1];
    f.first += dyad(f.a_lo[al], f.a_up[al]);
  }

  // normal part of a_{alpha,beta} gives b; tangential part the
  // Christoffel symbols
  for (int al = 0; al < 2; ++al)
    for (int be = al; be < 2; ++be) {
      Vec3 aab = patch.base_vector_deriv(al, be, x);
      double b = dot(aab, f.n0);
      f.b_lo[al][be] = f.b_lo[be][al] = b;
      for (int ga = 0; ga < 2; ++ga) {
        double g = dot(aab, f.a_up[ga]);
        f.christoffel[ga][al][be] = g;
        f.christoffel[ga][be][al] = g;
      }
    }
  for (int al = 0; al < 2; ++al)
    for (int be = 0; be < 2; ++be) {
      f.b_mix[al][be] =
          f.metric_up[al][0] * f.b_lo[0][be] + f.metric_up[al][1] * f.b_lo[1][be];
      f.second += f.b_lo[al][be] * dyad(f.a_up[al], f.a_up[be]);
      f.alternator += f.eps_up(al, be) * dyad(f.a_lo[al], f.a_lo[be]);
    }
  return f;
}

namespace {

bool analytic_patch(const SurfacePatch& patch) {
  return static_cast<bool>(patch.dy0) && static_cast<bool>(patch.d2y0);
}

// n0_{,gamma} = -b^alpha_gamma a_alpha
Vec3 normal_deriv(const SurfaceFrames& f, int gamma) {
  return -(f.b_mix[0][gamma] * f.a_lo[0] + f.b_mix[1][gamma] * f.a_lo[1]);
}

// derivative of a_i (i = 0,1 tangent, 2 normal)
Vec3 base_lo_deriv(const SurfacePatch& patch, const SurfaceFrames& f,
                   const Vec2& x, int i, int gamma) {
  if (i < 2) return patch.base_vector_deriv(i, gamma, x);
  return normal_deriv(f, gamma);
}

// a^alpha_{,gamma} = -Gamma^alpha_{gamma sigma} a^sigma + b^alpha_gamma n0
Vec3 base_up_deriv(const SurfaceFrames& f, int i, int gamma) {
  if (i == 2) return normal_deriv(f, gamma);
  Vec3 r = f.b_mix[i][gamma] * f.n0;
  for (int s = 0; s < 2; ++s)
    r -= f.christoffel[i][gamma][s] * f.a_up[s];
  return r;
}

// partial of T_{ij} = a_i . T a_j (mixed=false) or T^i_{.j} = a^i . T a_j
double surf_component_partial(const SurfMatField& t, const SurfacePatch& patch,
                              const SurfaceFrames& f, const Vec2& x, int i,
                              int j, int gamma, bool mixed) {
  if (t.analytic() && analytic_patch(patch)) {
    Mat3 tv = t(x);
    Mat3 tg = t.deriv(gamma, x);
    Vec3 bi = mixed ? f.base_up(i) : f.base_lo(i);
    Vec3 bi_g = mixed ? base_up_deriv(f, i, gamma)
                      : base_lo_deriv(patch, f, x, i, gamma);
    Vec3 bj = f.base_lo(j);
    Vec3 bj_g = base_lo_deriv(patch, f, x, j, gamma);
    return dot(bi_g, tv * bj) + dot(bi, tg * bj) + dot(bi, tv * bj_g);
  }
  auto comp = [&](const Vec2& y) {
    SurfaceFrames fy = surf_frames(patch, y);
    Vec3 bi = mixed ? fy.base_up(i) : fy.base_lo(i);
    return dot(bi, t(y) * fy.base_lo(j));
  };
  double h = fd_step(norm(x));
  Vec2 xp = x, xm = x;
  xp[gamma] += h;
  xm[gamma] -= h;
  return (comp(xp) - comp(xm)) * (0.5 / h);
}

// partial of v_i = v . a_i
double surf_vec_component_partial(const SurfVecField& v,
                                  const SurfacePatch& patch,
                                  const SurfaceFrames& f, const Vec2& x, int i,
                                  int alpha) {
  if (v.analytic() && analytic_patch(patch)) {
    return dot(base_lo_deriv(patch, f, x, i, alpha), v(x)) +
           dot(f.base_lo(i), v.deriv(alpha, x));
  }
  auto comp = [&](const Vec2& y) {
    SurfaceFrames fy = surf_frames(patch, y);
    return dot(fy.base_lo(i), v(y));
  };
  double h = fd_step(norm(x));
  Vec2 xp = x, xm = x;
  xp[alpha] += h;
  xm[alpha] -= h;
  return (comp(xp) - comp(xm)) * (0.5 / h);
}

struct SurfTensorComponents {
  double c[3][3];       // T_{ij} or T^i_{.j}
  double dc[3][3][2];   // partials w.r.t. x_gamma
};

SurfTensorComponents surf_components(const SurfMatField& t,
                                     const SurfacePatch& patch,
                                     const SurfaceFrames& f, const Vec2& x,
                                     bool mixed) {
  SurfTensorComponents sc;
  Mat3 tv = t(x);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec3 bi = mixed ? f.base_up(i) : f.base_lo(i);
      sc.c[i][j] = dot(bi, tv * f.base_lo(j));
      for (int g = 0; g < 2; ++g)
        sc.dc[i][j][g] = surf_component_partial(t, patch, f, x, i, j, g, mixed);
    }
  return sc;
}

}  // namespace

Mat3 grad_s(const SurfVecField& v, const SurfacePatch& patch, const Vec2& x) {
  SurfaceFrames f = surf_frames(patch, x);
  Mat3 r;
  for (int al = 0; al < 2; ++al) r += dyad(v.deriv(al, x), f.a_up[al]);
  return r;
}

double div_s(const SurfVecField& v, const SurfacePatch& patch, const Vec2& x) {
  return trace(grad_s(v, patch, x));
}

Vec3 curl_s_vec(const SurfVecField& v, const SurfacePatch& patch,
                const Vec2& x) {
  SurfaceFrames f = surf_frames(patch, x);
  Vec3 r;
  for (int al = 0; al < 2; ++al) r -= cross(v.deriv(al, x), f.a_up[al]);
  return r;
}

Vec3 curl_s_vec_components(const SurfVecField& v, const SurfacePatch& patch,
                           const Vec2& x) {
  SurfaceFrames f = surf_frames(patch, x);
  Vec3 vv = v(x);
  double c[3];  // v_beta, v_3
  for (int i = 0; i < 3; ++i) c[i] = dot(f.base_lo(i), vv);

  Vec3 r;
  for (int al = 0; al < 2; ++al)
    for (int be = 0; be < 2; ++be) {
      double e = f.eps_up(al, be);
      if (e == 0.0) continue;
      double v3b = surf_vec_component_partial(v, patch, f, x, 2, be);
      for (int ga = 0; ga < 2; ++ga) v3b += f.b_mix[ga][be] * c[ga];
      double vba = surf_vec_component_partial(v, patch, f, x, be, al);
      for (int ga = 0; ga < 2; ++ga)
        vba -= f.christoffel[ga][al][be] * c[ga];
      r += e * (v3b * f.a_lo[al] + vba * f.n0);
    }
  return r;
}

Mat3 curl_s_tensor(const SurfMatField& t, const SurfacePatch& patch,
                   const Vec2& x, SurfCurlRoute route) {
  SurfaceFrames f = surf_frames(patch, x);

  if (route == SurfCurlRoute::Direct) {
    Mat3 r;
    for (int al = 0; al < 2; ++al)
      r -= tensor_cross_vector(t.deriv(al, x), f.a_up[al]);
    return r;
  }

  if (route == SurfCurlRoute::CovariantComp) {
    SurfTensorComponents sc = surf_components(t, patch, f, x, false);
    auto cd_tt = [&](int al, int be, int ga) {  // T_{alpha beta|gamma}
      double r = sc.dc[al][be][ga];
      for (int de = 0; de < 2; ++de) {
        r -= f.christoffel[de][be][ga] * sc.c[al][de];
        r -= f.christoffel[de][al][ga] * sc.c[de][be];
      }
      return r;
    };
    auto cd_t3 = [&](int al, int ga) {  // T_{alpha 3|gamma}
      double r = sc.dc[al][2][ga];
      for (int be = 0; be < 2; ++be)
        r -= f.christoffel[be][al][ga] * sc.c[be][2];
      return r;
    };
    auto cd_3t = [&](int al, int ga) {  // T_{3 alpha|gamma}
      double r = sc.dc[2][al][ga];
      for (int be = 0; be < 2; ++be)
        r -= f.christoffel[be][al][ga] * sc.c[2][be];
      return r;
    };

    Mat3 r;
    for (int be = 0; be < 2; ++be)
      for (int ga = 0; ga < 2; ++ga) {
        double e = f.eps_up(be, ga);
        if (e == 0.0) continue;
        for (int al = 0; al < 2; ++al) {
          double c1 = cd_t3(al, ga) - f.b_lo[al][ga] * sc.c[2][2];
          for (int si = 0; si < 2; ++si)
            c1 += f.b_mix[si][ga] * sc.c[al][si];
          r += (e * c1) * dyad(f.a_up[al], f.a_lo[be]);
          // e^{gamma beta} = -e^{beta gamma}
          double c2 = cd_tt(al, be, ga) - f.b_lo[al][ga] * sc.c[2][be];
          r += (-e * c2) * dyad(f.a_up[al], f.n0);
        }
        double c3 = sc.dc[2][2][ga];
        for (int al = 0; al < 2; ++al)
          c3 += f.b_mix[al][ga] * (sc.c[al][2] + sc.c[2][al]);
        r += (e * c3) * dyad(f.n0, f.a_lo[be]);
        double c4 = cd_3t(be, ga);
        for (int al = 0; al < 2; ++al)
          c4 += f.b_mix[al][ga] * sc.c[al][be];
        r += (-e * c4) * dyad(f.n0, f.n0);
      }
    return r;
  }

  if (route == SurfCurlRoute::MixedComp) {
    SurfTensorComponents sc = surf_components(t, patch, f, x, true);
    auto cd_tt = [&](int al, int be, int ga) {  // T^alpha_{.beta|gamma}
      double r = sc.dc[al][be][ga];
      for (int si = 0; si < 2; ++si) {
        r += f.christoffel[al][ga][si] * sc.c[si][be];
        r -= f.christoffel[si][be][ga] * sc.c[al][si];
      }
      return r;
    };
    auto cd_t3 = [&](int al, int ga) {  // T^alpha_{.3|gamma}
      double r = sc.dc[al][2][ga];
      for (int si = 0; si < 2; ++si)
        r += f.christoffel[al][ga][si] * sc.c[si][2];
      return r;
    };
    auto cd_3t = [&](int be, int ga) {  // T^3_{.beta|gamma}
      double r = sc.dc[2][be][ga];
      for (int si = 0; si < 2; ++si)
        r -= f.christoffel[si][be][ga] * sc.c[2][si];
      return r;
    };

    Mat3 r;
    for (int be = 0; be < 2; ++be)
      for (int ga = 0; ga < 2; ++ga) {
        double e = f.eps_up(be, ga);
        if (e == 0.0) continue;
        for (int al = 0; al < 2; ++al) {
          double c1 = cd_t3(al, ga) - f.b_mix[al][ga] * sc.c[2][2];
          for (int si = 0; si < 2; ++si)
            c1 += f.b_mix[si][ga] * sc.c[al][si];
          r += (e * c1) * dyad(f.a_lo[al], f.a_lo[be]);
          double c2 = cd_tt(al, be, ga) - f.b_mix[al][ga] * sc.c[2][be];
          r += (-e * c2) * dyad(f.a_lo[al], f.n0);
        }
        double c3 = sc.dc[2][2][ga];
        for (int al = 0; al < 2; ++al)
          c3 += f.b_lo[al][ga] * sc.c[al][2] + f.b_mix[al][ga] * sc.c[2][al];
        r += (e * c3) * dyad(f.n0, f.a_lo[be]);
        double c4 = cd_3t(be, ga);
        for (int al = 0; al < 2; ++al)
          c4 += f.b_lo[al][ga] * sc.c[al][be];
        r += (-e * c4) * dyad(f.n0, f.n0);
      }
    return r;
  }

  // row-wise routes
  bool covariant_rows = route == SurfCurlRoute::RowsCovariant;
  Mat3 tv = t(x);
  Mat3 tvt = transpose(tv);
  Vec3 rows[3];
  for (int i = 0; i < 3; ++i)
    rows[i] = tvt * (covariant_rows ? f.base_lo(i) : f.base_up(i));

  auto row_partial = [&](int i, int ga) -> Vec3 {
    if (t.analytic() && analytic_patch(patch)) {
      Vec3 bi_g = covariant_rows ? base_lo_deriv(patch, f, x, i, ga)
                                 : base_up_deriv(f, i, ga);
      return transpose(t.deriv(ga, x)) *
                 (covariant_rows ? f.base_lo(i) : f.base_up(i)) +
             tvt * bi_g;
    }
    auto rowfn = [&](const Vec2& y) {
      SurfaceFrames fy = surf_frames(patch, y);
      return transpose(t(y)) * (covariant_rows ? fy.base_lo(i) : fy.base_up(i));
    };
    double h = fd_step(norm(x));
    Vec2 xp = x, xm = x;
    xp[ga] += h;
    xm[ga] -= h;
    return (rowfn(xp) - rowfn(xm)) * (0.5 / h);
  };

  Mat3 r;
  for (int ga = 0; ga < 2; ++ga) {
    Mat3 m;
    if (covariant_rows) {
      for (int al = 0; al < 2; ++al) {
        Vec3 cov = row_partial(al, ga) - f.b_lo[al][ga] * rows[2];
        for (int be = 0; be < 2; ++be)
          cov -= f.christoffel[be][al][ga] * rows[be];
        m += dyad(f.a_up[al], cov);
      }
      Vec3 c3 = row_partial(2, ga);
      for (int al = 0; al < 2; ++al) c3 += f.b_mix[al][ga] * rows[al];
      m += dyad(f.n0, c3);
    } else {
      for (int al = 0; al < 2; ++al) {
        Vec3 cov = row_partial(al, ga) - f.b_mix[al][ga] * rows[2];
        for (int be = 0; be < 2; ++be)
          cov += f.christoffel[al][be][ga] * rows[be];
        m += dyad(f.a_lo[al], cov);
      }
      Vec3 c3 = row_partial(2, ga);
      for (int al = 0; al < 2; ++al) c3 += f.b_lo[al][ga] * rows[al];
      m += dyad(f.n0, c3);
    }
    r -= tensor_cross_vector(m, f.a_up[ga]);
  }
  return r;
}

Mat3 surf_covariant_tensor_deriv(const SurfMatField& t,
                                 const SurfacePatch& patch, const Vec2& x,
                                 int gamma) {
  SurfaceFrames f = surf_frames(patch, x);
  SurfTensorComponents sc = surf_components(t, patch, f, x, false);
  int ga = gamma;

  auto cd_tt = [&](int al, int be) {
    double r = sc.dc[al][be][ga];
    for (int de = 0; de < 2; ++de) {
      r -= f.christoffel[de][be][ga] * sc.c[al][de];
      r -= f.christoffel[de][al][ga] * sc.c[de][be];
    }
    return r;
  };
  auto cd_t3 = [&](int al) {
    double r = sc.dc[al][2][ga];
    for (int be = 0; be < 2; ++be)
      r -= f.christoffel[be][al][ga] * sc.c[be][2];
    return r;
  };
  auto cd_3t = [&](int al) {
    double r = sc.dc[2][al][ga];
    for (int be = 0; be < 2; ++be)
      r -= f.christoffel[be][al][ga] * sc.c[2][be];
    return r;
  };

  Mat3 r;
  for (int al = 0; al < 2; ++al) {
    for (int be = 0; be < 2; ++be) {
      double c = cd_tt(al, be) - f.b_lo[al][ga] * sc.c[2][be] -
                 f.b_lo[be][ga] * sc.c[al][2];
      r += c * dyad(f.a_up[al], f.a_up[be]);
    }
    double c1 = cd_t3(al) - f.b_lo[al][ga] * sc.c[2][2];
    double c2 = cd_3t(al) - f.b_lo[al][ga] * sc.c[2][2];
    for (int be = 0; be < 2; ++be) {
      c1 += f.b_mix[be][ga] * sc.c[al][be];
      c2 += f.b_mix[be][ga] * sc.c[be][al];
    }
    r += c1 * dyad(f.a_up[al], f.n0) + c2 * dyad(f.n0, f.a_up[al]);
  }
  double c33 = sc.dc[2][2][ga];
  for (int al = 0; al < 2; ++al)
    c33 += f.b_mix[al][ga] * (sc.c[al][2] + sc.c[2][al]);
  r += c33 * dyad(f.n0, f.n0);
  return r;
}

Vec3 surf_covariant_vector_deriv(const SurfVecField& v,
                                 const SurfacePatch& patch, const Vec2& x,
                                 int alpha) {
  SurfaceFrames f = surf_frames(patch, x);
  Vec3 vv = v(x);
  double c[3];
  for (int i = 0; i < 3; ++i) c[i] = dot(f.base_lo(i), vv);

  Vec3 r;
  for (int be = 0; be < 2; ++be) {
    double vba = surf_vec_component_partial(v, patch, f, x, be, alpha);
    for (int ga = 0; ga < 2; ++ga)
      vba -= f.christoffel[ga][alpha][be] * c[ga];
    r += (vba - f.b_lo[alpha][be] * c[2]) * f.a_up[be];
  }
  double v3a = surf_vec_component_partial(v, patch, f, x, 2, alpha);
  for (int be = 0; be < 2; ++be) v3a += f.b_mix[be][alpha] * c[be];
  r += v3a * f.n0;
  return r;
}

}  // namespace cosserat
