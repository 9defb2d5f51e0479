// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion states its tolerance and (where applicable) its
// runtime budget directly in the check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "cosserat/catalog.hpp"
#include "cosserat/cosserat3d.hpp"
#include "cosserat/curl3d.hpp"
#include "cosserat/energy.hpp"
#include "cosserat/minimize.hpp"
#include "cosserat/shell.hpp"
#include "cosserat/surface.hpp"
#include "cosserat/validate.hpp"

using namespace cosserat;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failures = 0;

void report(int number, const std::string& title, bool pass,
            const std::string& detail) {
  std::printf("criterion %d: %-52s %s  (%s)\n", number, title.c_str(),
              pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++g_failures;
}

VecField3 chart_map(const Chart3& c) {
  return {[c](const Vec3& x) { return c.theta(x); },
          [c](int i, const Vec3& x) { return c.base_vector(i, x); }};
}

SurfVecField midsurface(const SurfacePatch& p) {
  return {[p](const Vec2& x) { return p.y0(x); },
          [p](int a, const Vec2& x) { return p.dy0(a, x); }};
}

ShellConfig shell_config(const SurfacePatch& patch,
                         const catalog::RotationSpec& rot) {
  return ShellConfig::with_default_q0(patch, midsurface(patch),
                                      catalog::make_rotation2(rot));
}

// --- criterion 1: 3D curvature-dislocation relation ------------------------

void criterion_1() {
  auto t0 = Clock::now();
  double max_an = 0.0, max_fd = 0.0;
  std::mt19937 rng(101);
  for (const auto& [cname, chart] : catalog::default_charts())
    for (const auto& [rname, rot] : catalog::default_rotation_specs()) {
      Config3D cfg;
      cfg.chart = chart;
      cfg.phi = chart_map(chart);
      cfg.Qe = catalog::make_rotation3(rot);
      Config3D cfg_fd = cfg;
      cfg_fd.Qe = {cfg.Qe.value, {}};  // drop analytic derivatives
      for (int s = 0; s < 50; ++s) {
        Vec3 x = catalog::random_interior_point(chart.domain, rng);
        NyeResiduals an =
            nye_check(wryness(cfg, x), dislocation_density(cfg, x));
        NyeResiduals fd =
            nye_check(wryness(cfg_fd, x), dislocation_density(cfg_fd, x));
        max_an = std::max(max_an, an.forward);
        max_fd = std::max(max_fd, fd.forward);
      }
    }
  double secs = seconds_since(t0);
  bool pass = max_an < 1e-10 && max_fd < 1e-6 && secs < 10.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "analytic %.2e < 1e-10, fd %.2e < 1e-6, %.2f s < 10 s", max_an,
                max_fd, secs);
  report(1, "3D curvature-dislocation relation, 4 charts x 4 rotations", pass,
         buf);
}

// --- criterion 2: shell relation and identity bundle ------------------------

void criterion_2() {
  auto t0 = Clock::now();
  double max_res = 0.0, max_slack = 0.0;
  std::mt19937 rng(202);
  for (const auto& [pname, patch] : catalog::default_patches())
    for (const auto& [rname, rot] : catalog::default_rotation_specs()) {
      ShellConfig cfg = shell_config(patch, rot);
      for (int s = 0; s < 50; ++s) {
        Vec2 x = catalog::random_interior_point(patch.domain, rng);
        Mat3 ke = shell_bending_curvature(cfg, x);
        Mat3 de = shell_dislocation(cfg, x);
        ShellNyeReport r = shell_nye(ke, de);
        for (double v : {r.forward, r.inverse, r.trace_identity,
                         r.skew_identity, r.devsym_identity, r.norm_identity})
          max_res = std::max(max_res, v);
        max_slack =
            std::max({max_slack, r.lower_bound_slack, r.upper_bound_slack});
      }
    }
  double secs = seconds_since(t0);
  bool pass = max_res < 1e-6 && max_slack <= 1e-9 && secs < 10.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "residuals %.2e < 1e-6, bound slack %.2e <= 1e-9, %.2f s < 10 s",
                max_res, max_slack, secs);
  report(2, "shell relation and identity bundle on 5 patches", pass, buf);
}

// --- criterion 3: multi-route agreement --------------------------------------

void criterion_3() {
  double max_res = 0.0;
  std::mt19937 rng(303);
  auto upd = [&](double r) { max_res = std::max(max_res, r); };

  // wryness (3 routes) and 3D dislocation (2 routes)
  for (const auto& [cname, chart] : catalog::default_charts())
    for (const auto& [rname, rot] : catalog::default_rotation_specs()) {
      Config3D cfg;
      cfg.chart = chart;
      cfg.phi = chart_map(chart);
      cfg.Qe = catalog::make_rotation3(rot);
      for (int s = 0; s < 10; ++s) {
        Vec3 x = catalog::random_interior_point(chart.domain, rng);
        Mat3 g = wryness(cfg, x, WrynessRoute::AxlGradient);
        upd(norm(g - wryness(cfg, x, WrynessRoute::Directors)));
        upd(norm(g - wryness(cfg, x, WrynessRoute::Omega)));
        Mat3 d = dislocation_density(cfg, x, DislocationRoute::Curl);
        upd(norm(d - dislocation_density(cfg, x, DislocationRoute::Directors)));
      }
    }

  // tensor curl in 3D (direct, 2 component routes, 2 row-wise routes)
  for (const auto& [cname, chart] : catalog::default_charts())
    for (int s = 0; s < 10; ++s) {
      Vec3 x = catalog::random_interior_point(chart.domain, rng);
      MatField3 t = catalog::random_poly_mat3(rng);
      Mat3 d = curl_tensor(t, chart, x);
      upd(norm(d - curl_tensor_components(t, chart, x,
                                          ComponentRoute::Covariant)));
      upd(norm(d - curl_tensor_components(t, chart, x, ComponentRoute::Mixed)));
      upd(norm(d - curl_rowwise(t, chart, x, RowRoute::ContravariantCarrier)));
      upd(norm(d - curl_rowwise(t, chart, x, RowRoute::CovariantCarrier)));
    }

  // shell bending curvature (4 routes) and shell dislocation (3 routes)
  for (const auto& [pname, patch] : catalog::default_patches())
    for (const auto& [rname, rot] : catalog::default_rotation_specs()) {
      ShellConfig cfg = shell_config(patch, rot);
      for (int s = 0; s < 10; ++s) {
        Vec2 x = catalog::random_interior_point(patch.domain, rng);
        Mat3 k = shell_bending_curvature(cfg, x, BendingRoute::AxlGradient);
        upd(norm(k - shell_bending_curvature(cfg, x, BendingRoute::Components)));
        upd(norm(k - shell_bending_curvature(cfg, x, BendingRoute::Directors)));
        upd(norm(k - shell_bending_curvature(cfg, x, BendingRoute::Omega)));
        Mat3 d = shell_dislocation(cfg, x, ShellDislocationRoute::SurfaceCurl);
        upd(norm(d -
                 shell_dislocation(cfg, x, ShellDislocationRoute::CrossProduct)));
        upd(norm(d -
                 shell_dislocation(cfg, x, ShellDislocationRoute::Directors)));
      }
    }

  // surface tensor curl (5 routes)
  for (const auto& [pname, patch] : catalog::default_patches())
    for (int s = 0; s < 10; ++s) {
      Vec2 x = catalog::random_interior_point(patch.domain, rng);
      SurfMatField t = catalog::random_poly_mat2(rng);
      Mat3 d = curl_s_tensor(t, patch, x, SurfCurlRoute::Direct);
      upd(norm(d - curl_s_tensor(t, patch, x, SurfCurlRoute::CovariantComp)));
      upd(norm(d - curl_s_tensor(t, patch, x, SurfCurlRoute::MixedComp)));
      upd(norm(d - curl_s_tensor(t, patch, x, SurfCurlRoute::RowsCovariant)));
      upd(norm(d - curl_s_tensor(t, patch, x, SurfCurlRoute::RowsMixed)));
    }

  bool pass = max_res < 1e-6;
  char buf[96];
  std::snprintf(buf, sizeof buf, "max pairwise residual %.2e < 1e-6", max_res);
  report(3, "all alternative computation routes agree pairwise", pass, buf);
}

// --- criterion 4: planar cofactor structure ----------------------------------

void criterion_4() {
  double max_res = 0.0;
  std::mt19937 rng(404);
  auto upd = [&](double r) { max_res = std::max(max_res, r); };
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  for (const auto& [pname, patch] : catalog::default_patches()) {
    for (const auto& [rname, rot] : catalog::default_rotation_specs()) {
      ShellConfig cfg = shell_config(patch, rot);
      for (int s = 0; s < 10; ++s) {
        Vec2 x = catalog::random_interior_point(patch.domain, rng);
        SurfaceFrames f = surf_frames(patch, x);
        Mat3 ke = shell_bending_curvature(cfg, x);
        Mat3 de = shell_dislocation(cfg, x);
        PlanarSplit sp = planar_split(de, ke, f);
        upd(sp.mixed_residual);          // D_{alpha 3} = -K_{3 alpha}
        upd(sp.reassembly_residual);
        upd(sp.normal_action_residual);
        CofactorCheck cc = planar_cofactor_check(ke, de, f);
        upd(cc.planar_residual);
        upd(cc.reassembly_residual);
      }
    }
    // algebraic properties of the planar transformation on random tensors
    for (int s = 0; s < 20; ++s) {
      Vec2 x = catalog::random_interior_point(patch.domain, rng);
      SurfaceFrames f = surf_frames(patch, x);
      Mat3 m;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = u(rng);
      PlanarTensor s0{f.first * m * f.first, f};
      PlanarTensor t1 = transform_T(s0);
      upd(norm(transform_T(t1).tensor - s0.tensor));        // involution
      upd(norm(t1.tensor - transform_T_alternator(s0)));    // -c S c
      if (std::fabs(s0.det2()) > 1e-6)
        upd(norm(t1.tensor - transform_T_inverse(s0)));     // det2 S^{-T}
    }
  }

  bool pass = max_res < 1e-6;
  char buf[96];
  std::snprintf(buf, sizeof buf, "max structural residual %.2e < 1e-6",
                max_res);
  report(4, "planar cofactor structure of the shell measures", pass, buf);
}

// --- criterion 5: Cartesian index-formula reductions -------------------------

void criterion_5() {
  double max_res = 0.0;
  std::mt19937 rng(505);
  auto upd = [&](double r) { max_res = std::max(max_res, r); };
  Chart3 chart = catalog::make_chart("identity");

  // curl of vector and tensor fields vs. the alternator index formulas
  for (int s = 0; s < 20; ++s) {
    Vec3 x = catalog::random_interior_point(chart.domain, rng);
    VecField3 v = catalog::random_poly_vec3(rng);
    MatField3 t = catalog::random_poly_mat3(rng);

    Vec3 cv_ref;  // e_{ijk} v_{j,i} e_k
    for (int k = 0; k < 3; ++k) {
      double sum = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) sum += levi_civita(i, j, k) * v.deriv(i, x)[j];
      cv_ref[k] = sum;
    }
    upd(norm(curl_vec(v, chart, x) - cv_ref));

    Mat3 ct_ref;  // e_{ijk} T_{sj,i} e_s (x) e_k
    for (int r = 0; r < 3; ++r)
      for (int k = 0; k < 3; ++k) {
        double sum = 0.0;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            sum += levi_civita(i, j, k) * t.deriv(i, x)(r, j);
        ct_ref(r, k) = sum;
      }
    Mat3 ct = curl_tensor(t, chart, x);
    upd(norm(ct - ct_ref));
    // row-wise action: row s of Curl T is curl of row s of T
    for (int r = 0; r < 3; ++r) {
      VecField3 row = {[t, r](const Vec3& y) { return t(y).row(r); },
                       [t, r](int i, const Vec3& y) {
                         return t.deriv(i, y).row(r);
                       }};
      upd(norm(ct.row(r) - curl_vec(row, chart, x)));
    }
  }

  // curvature measures vs. the director index formulas (reference triad e_i)
  for (const auto& [rname, rot] : catalog::default_rotation_specs()) {
    Config3D cfg;
    cfg.chart = chart;
    cfg.phi = chart_map(chart);
    cfg.Qe = catalog::make_rotation3(rot);
    for (int s = 0; s < 20; ++s) {
      Vec3 x = catalog::random_interior_point(chart.domain, rng);
      Mat3 q = cfg.Qe(x);  // d_k = column k

      Mat3 g_ref;  // (1/2) e_{iks} (d_{k,j}.d_s) e_i (x) e_j
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double sum = 0.0;
          Mat3 dq = cfg.Qe.deriv(j, x);
          for (int k = 0; k < 3; ++k)
            for (int s2 = 0; s2 < 3; ++s2)
              sum += levi_civita(i, k, s2) * dot(dq.col(k), q.col(s2));
          g_ref(i, j) = 0.5 * sum;
        }
      upd(norm(wryness(cfg, x) - g_ref));

      Mat3 d_ref;  // e_{ijk} (d_{j,i}.d_s) e_s (x) e_k
      for (int s2 = 0; s2 < 3; ++s2)
        for (int k = 0; k < 3; ++k) {
          double sum = 0.0;
          for (int i = 0; i < 3; ++i) {
            Mat3 dq = cfg.Qe.deriv(i, x);
            for (int j = 0; j < 3; ++j)
              sum += levi_civita(i, j, k) * dot(dq.col(j), q.col(s2));
          }
          d_ref(s2, k) = sum;
        }
      upd(norm(dislocation_density(cfg, x) - d_ref));
    }
  }

  bool pass = max_res < 1e-12;
  char buf[96];
  std::snprintf(buf, sizeof buf, "max reduction residual %.2e < 1e-12",
                max_res);
  report(5, "Cartesian index formulas on the identity chart", pass, buf);
}

// --- criterion 6: energy properties ------------------------------------------

void criterion_6() {
  std::mt19937 rng(606);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  bool pass = true;
  std::string why;

  EnergyParams prm = EnergyParams::checked(1.0, 1.7, 0.85, 0.5, 1, 1, 1, 2);
  if (energy_3d(Mat3::zero(), Mat3::zero(), prm) != 0.0 ||
      energy_shell(Mat3::zero(), Mat3::zero(), prm) != 0.0) {
    pass = false;
    why += "nonzero at the reference; ";
  }

  int positive = 0;
  for (int s = 0; s < 1000; ++s) {
    Mat3 e, d;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        e(i, j) = u(rng);
        d(i, j) = u(rng);
      }
    if (energy_3d(e, d, prm) > 0.0) ++positive;
  }
  if (positive != 1000) {
    pass = false;
    why += "not strictly positive on random inputs; ";
  }

  double max_hom = 0.0;
  for (int s = 0; s < 100; ++s) {
    Mat3 e, d;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        e(i, j) = u(rng);
        d(i, j) = u(rng);
      }
    double t = 0.3 + 2.0 * std::generate_canonical<double, 53>(rng);
    double w = energy_3d(e, d, prm);
    max_hom = std::max(
        max_hom, std::fabs(energy_3d(t * e, t * d, prm) - t * t * w) /
                     (t * t * w));
  }
  if (max_hom >= 1e-12) {
    pass = false;
    why += "quadratic homogeneity violated; ";
  }

  double w_bulk = energy_3d(Mat3::identity(), Mat3::zero(), prm);
  double w_skew = energy_3d(skew_from_axial(normalized(Vec3(1, 2, -2))),
                            Mat3::zero(), prm);
  double e_bulk = std::fabs(w_bulk - 4.5 * prm.kappa) / (4.5 * prm.kappa);
  double e_skew = std::fabs(w_skew - 2.0 * prm.mu_c) / (2.0 * prm.mu_c);
  if (e_bulk > 1e-14 || e_skew > 1e-14) {
    pass = false;
    why += "worked closed-form values not reproduced; ";
  }

  // frame indifference of the discrete total energy under rigid motions
  SurfacePatch patch = catalog::make_patch("graph");
  ShellState st = ShellState::flat_reference(patch, 9, 9);
  st.perturb_rotations(0.2, 42);
  double max_fi = 0.0;
  for (int s = 0; s < 5; ++s) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Quat qr = Quat(gauss(rng), gauss(rng), gauss(rng), gauss(rng)).normalized();
    Mat3 rot = qr.to_matrix();
    Vec3 shift(u(rng), u(rng), u(rng));
    ShellState moved = st;
    for (int k = 0; k < st.n1 * st.n2; ++k) {
      moved.m[k] = rot * st.m[k] + shift;
      moved.q[k] = (qr * st.q[k]).normalized();
    }
    double e0 = total_energy(st, patch, prm);
    double e1 = total_energy(moved, patch, prm);
    max_fi = std::max(max_fi, std::fabs(e1 - e0) / e0);
  }
  if (max_fi >= 1e-12) {
    pass = false;
    why += "discrete energy not frame indifferent; ";
  }

  char buf[200];
  std::snprintf(buf, sizeof buf,
                "zero ref, %d/1000 positive, homogeneity %.1e, closed-form "
                "%.1e/%.1e, rigid-motion %.1e%s%s",
                positive, max_hom, e_bulk, e_skew, max_fi,
                why.empty() ? "" : "; ", why.c_str());
  report(6, "energy density and discrete energy properties", pass, buf);
}

// --- criterion 7: minimizer --------------------------------------------------

void criterion_7() {
  auto t0 = Clock::now();
  SurfacePatch plane = catalog::make_patch("plane");
  EnergyParams prm = EnergyParams::checked(1.0, 1.0, 0.5, 0.5, 1, 1, 1, 2);

  auto run = [&]() {
    ShellState s = ShellState::flat_reference(plane, 16, 16);
    s.clamp_boundary();
    s.perturb_rotations(0.05, 2024);
    MinimizeOptions opt;
    opt.max_iter = 5000;
    opt.grad_tol = 1e-6;
    return minimize(s, plane, prm, opt);
  };
  MinimizeReport a = run();
  MinimizeReport b = run();

  bool monotone = true;
  for (std::size_t i = 1; i < a.trace.size(); ++i)
    if (a.trace[i].energy > a.trace[i - 1].energy) monotone = false;
  bool deterministic = a.trace.size() == b.trace.size() &&
                       a.final_energy == b.final_energy &&
                       a.final_grad_norm == b.final_grad_norm;
  for (std::size_t i = 0; deterministic && i < a.trace.size(); ++i)
    deterministic = a.trace[i].energy == b.trace[i].energy;

  double secs = seconds_since(t0);
  bool pass = a.converged && monotone && deterministic &&
              a.final_energy < 1e-3 * a.initial_energy &&
              a.final_grad_norm < 1e-6 && secs < 60.0;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%s, monotone %s, E %.3e -> %.3e, |g| %.2e < 1e-6, "
                "deterministic %s, %.1f s < 60 s",
                a.converged ? "converged" : "not converged",
                monotone ? "yes" : "NO", a.initial_energy, a.final_energy,
                a.final_grad_norm, deterministic ? "yes" : "NO", secs);
  report(7, "gradient descent on a 16x16 clamped perturbed plate", pass, buf);
}

// --- criterion 8: fault injection --------------------------------------------

void criterion_8() {
  bool pass = true;
  std::string detail;

  ValidationReport clean = run_validation("all", 10, 7, Fault::None);
  if (!clean.pass) {
    pass = false;
    detail += "clean run fails; ";
  }

  for (const std::string& fname : fault_names()) {
    ValidationReport rep = run_validation("all", 10, 7, fault_from_name(fname));
    std::vector<std::string> failing;
    for (const CheckResult& c : rep.checks)
      if (!c.pass) failing.push_back(c.name);
    if (failing.empty()) {
      pass = false;
      detail += fname + " undetected; ";
    } else {
      detail += fname + " -> " + failing.front() +
                (failing.size() > 1 ? ",..." : "") + "; ";
    }
  }
  if (!detail.empty()) detail.pop_back(), detail.pop_back();
  report(8, "every injected fault trips a named validation check", pass,
         detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (g_failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
