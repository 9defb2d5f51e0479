#include "cosserat/curl3d.hpp"

namespace cosserat {

Vec3 curl_vec(const VecField3& v, const Chart3& chart, const Vec3& x) {
  ChartFrames f = frames_at(chart, x);
  Vec3 r;
  for (int i = 0; i < 3; ++i) r -= cross(v.deriv(i, x), f.g_up[i]);
  return r;
}

Mat3 curl_tensor(const MatField3& t, const Chart3& chart, const Vec3& x) {
  ChartFrames f = frames_at(chart, x);
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    r -= tensor_cross_vector(t.deriv(i, x), f.g_up[i]);
  return r;
}

Mat3 curl_tensor_transposed(const MatField3& t, const Chart3& chart,
                            const Vec3& x) {
  return transpose(curl_tensor(t, chart, x));
}

namespace {

bool analytic_chart(const Chart3& chart) {
  return static_cast<bool>(chart.jacobian) && static_cast<bool>(chart.second);
}

// g^s_{,i} = -Gamma^s_{ir} g^r
Vec3 contravariant_base_deriv(const ChartFrames& f, int s, int i) {
  Vec3 r;
  for (int q = 0; q < 3; ++q) r -= f.christoffel[s][i][q] * f.g_up[q];
  return r;
}

// Partial derivative of the scalar component T_sj = g_s . T g_j
// (covariant) or T^s_{.j} = g^s . T g_j (mixed).
double component_partial(const MatField3& t, const Chart3& chart,
                         const ChartFrames& f, const Vec3& x, int s, int j,
                         int i, ComponentRoute route) {
  if (t.analytic() && analytic_chart(chart)) {
    Mat3 ti = t.deriv(i, x);
    Mat3 tv = t(x);
    Vec3 gs = route == ComponentRoute::Covariant ? f.g_lo[s] : f.g_up[s];
    Vec3 gs_i = route == ComponentRoute::Covariant
                    ? chart.base_vector_deriv(s, i, x)
                    : contravariant_base_deriv(f, s, i);
    Vec3 gj_i = chart.base_vector_deriv(j, i, x);
    return dot(gs_i, tv * f.g_lo[j]) + dot(gs, ti * f.g_lo[j]) +
           dot(gs, tv * gj_i);
  }
  auto comp = [&](const Vec3& y) {
    ChartFrames fy = frames_at(chart, y);
    Vec3 gs = route == ComponentRoute::Covariant ? fy.g_lo[s] : fy.g_up[s];
    return dot(gs, t(y) * fy.g_lo[j]);
  };
  double h = fd_step(norm(x));
  Vec3 xp = x, xm = x;
  xp[i] += h;
  xm[i] -= h;
  return (comp(xp) - comp(xm)) * (0.5 / h);
}

}  // namespace

Mat3 curl_tensor_components(const MatField3& t, const Chart3& chart,
                            const Vec3& x, ComponentRoute route) {
  ChartFrames f = frames_at(chart, x);
  Mat3 tv = t(x);

  double comp[3][3];  // T_sj or T^s_{.j}
  for (int s = 0; s < 3; ++s)
    for (int j = 0; j < 3; ++j) {
      Vec3 gs = route == ComponentRoute::Covariant ? f.g_lo[s] : f.g_up[s];
      comp[s][j] = dot(gs, tv * f.g_lo[j]);
    }

  Mat3 r;
  for (int s = 0; s < 3; ++s)
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) {
        double cov = component_partial(t, chart, f, x, s, j, i, route);
        if (route == ComponentRoute::Covariant) {
          // T_{sj|i} = T_{sj,i} - Gamma^r_{si} T_{rj} - Gamma^r_{ji} T_{sr}
          for (int q = 0; q < 3; ++q) {
            cov -= f.christoffel[q][s][i] * comp[q][j];
            cov -= f.christoffel[q][j][i] * comp[s][q];
          }
        } else {
          // T^s_{.j|i} = T^s_{.j,i} + Gamma^s_{ri} T^r_{.j} - Gamma^r_{ji} T^s_{.r}
          for (int q = 0; q < 3; ++q) {
            cov += f.christoffel[s][q][i] * comp[q][j];
            cov -= f.christoffel[q][j][i] * comp[s][q];
          }
        }
        for (int k = 0; k < 3; ++k) {
          double e = f.eps_up(i, j, k);
          if (e == 0.0) continue;
          Vec3 carrier =
              route == ComponentRoute::Covariant ? f.g_up[s] : f.g_lo[s];
          r += (e * cov) * dyad(carrier, f.g_lo[k]);
        }
      }
  return r;
}

Mat3 curl_rowwise(const MatField3& t, const Chart3& chart, const Vec3& x,
                  RowRoute route) {
  ChartFrames f = frames_at(chart, x);
  Mat3 tv = t(x);
  bool contra = route == RowRoute::ContravariantCarrier;

  // rows T_i = T^T g_i (carrier g^i) or T^i = T^T g^i (carrier g_i)
  Vec3 rows[3];
  Mat3 tvt = transpose(tv);
  for (int i = 0; i < 3; ++i)
    rows[i] = tvt * (contra ? f.g_lo[i] : f.g_up[i]);

  auto row_partial = [&](int i, int j) -> Vec3 {
    if (t.analytic() && analytic_chart(chart)) {
      Vec3 gi_j = contra ? chart.base_vector_deriv(i, j, x)
                         : contravariant_base_deriv(f, i, j);
      return transpose(t.deriv(j, x)) * (contra ? f.g_lo[i] : f.g_up[i]) +
             tvt * gi_j;
    }
    auto rowfn = [&](const Vec3& y) {
      ChartFrames fy = frames_at(chart, y);
      return transpose(t(y)) * (contra ? fy.g_lo[i] : fy.g_up[i]);
    };
    double h = fd_step(norm(x));
    Vec3 xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    return (rowfn(xp) - rowfn(xm)) * (0.5 / h);
  };

  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    Vec3 curl_cov;
    for (int j = 0; j < 3; ++j) {
      Vec3 cov = row_partial(i, j);
      if (contra) {
        // T_{i|j} = T_{i,j} - Gamma^r_{ji} T_r
        for (int q = 0; q < 3; ++q)
          cov -= f.christoffel[q][j][i] * rows[q];
      } else {
        // T^i_{|j} = T^i_{,j} + Gamma^i_{rj} T^r
        for (int q = 0; q < 3; ++q)
          cov += f.christoffel[i][q][j] * rows[q];
      }
      curl_cov -= cross(cov, f.g_up[j]);
    }
    r += dyad(contra ? f.g_up[i] : f.g_lo[i], curl_cov);
  }
  return r;
}

}  // namespace cosserat
