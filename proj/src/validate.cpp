#include "cosserat/validate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "cosserat/catalog.hpp"
#include "cosserat/cosserat3d.hpp"
#include "cosserat/curl3d.hpp"
#include "cosserat/energy.hpp"
#include "cosserat/errors.hpp"
#include "cosserat/shell.hpp"
#include "cosserat/surface.hpp"

namespace cosserat {

namespace {

using catalog::RotationSpec;

struct Outcome {
  double max_res = 0.0;
  int n = 0;
  std::string first;
};

void record(Outcome& o, double res, double tol, const std::string& where) {
  ++o.n;
  if (res > o.max_res) o.max_res = res;
  if (res > tol && o.first.empty()) o.first = where;
}

std::string where_str(const std::string& entry, const Vec3& x) {
  std::ostringstream os;
  os << entry << " point=(" << x[0] << "," << x[1] << "," << x[2] << ")";
  return os.str();
}

std::string where_str(const std::string& entry, const Vec2& x) {
  std::ostringstream os;
  os << entry << " point=(" << x.u << "," << x.v << ")";
  return os.str();
}

// deterministic per-check seed, independent of std::hash
unsigned check_seed(unsigned base, const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return base ^ static_cast<unsigned>(h ^ (h >> 32));
}

double max_pairwise(const std::vector<Mat3>& ms) {
  double r = 0.0;
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      r = std::max(r, norm(ms[i] - ms[j]));
  return r;
}

VecField3 chart_map_field(const Chart3& c) {
  return {[c](const Vec3& x) { return c.theta(x); },
          [c](int i, const Vec3& x) { return c.base_vector(i, x); }};
}

SurfVecField midsurface_field(const SurfacePatch& p) {
  return {[p](const Vec2& x) { return p.y0(x); },
          [p](int a, const Vec2& x) { return p.dy0(a, x); }};
}

Config3D make_config3d(const Chart3& chart, const RotationSpec& rot) {
  Config3D cfg;
  cfg.chart = chart;
  cfg.phi = chart_map_field(chart);
  cfg.Qe = catalog::make_rotation3(rot);
  return cfg;
}

ShellConfig make_shell_config(const SurfacePatch& patch,
                              const RotationSpec& rot) {
  return ShellConfig::with_default_q0(patch, midsurface_field(patch),
                                      catalog::make_rotation2(rot));
}

// loop helpers over the catalog ensembles

template <class Fn>
Outcome for_charts(int samples, unsigned seed, double tol, Fn&& fn) {
  Outcome o;
  for (const auto& [name, chart] : catalog::default_charts()) {
    std::mt19937 rng(check_seed(seed, name));
    for (int s = 0; s < samples; ++s) {
      Vec3 x = catalog::random_interior_point(chart.domain, rng);
      double r = fn(name, chart, x, rng);
      record(o, r, tol, where_str("chart=" + name, x));
    }
  }
  return o;
}

template <class Fn>
Outcome for_chart_rotations(int samples, unsigned seed, double tol, Fn&& fn) {
  Outcome o;
  for (const auto& [cname, chart] : catalog::default_charts())
    for (const auto& [rname, rot] : catalog::default_rotation_specs()) {
      Config3D cfg = make_config3d(chart, rot);
      std::mt19937 rng(check_seed(seed, cname + "/" + rname));
      for (int s = 0; s < samples; ++s) {
        Vec3 x = catalog::random_interior_point(chart.domain, rng);
        double r = fn(cfg, x, rng);
        record(o, r, tol,
               where_str("chart=" + cname + " rotation=" + rname, x));
      }
    }
  return o;
}

template <class Fn>
Outcome for_patches(int samples, unsigned seed, double tol, Fn&& fn) {
  Outcome o;
  for (const auto& [name, patch] : catalog::default_patches()) {
    std::mt19937 rng(check_seed(seed, name));
    for (int s = 0; s < samples; ++s) {
      Vec2 x = catalog::random_interior_point(patch.domain, rng);
      double r = fn(name, patch, x, rng);
      record(o, r, tol, where_str("patch=" + name, x));
    }
  }
  return o;
}

template <class Fn>
Outcome for_patch_rotations(int samples, unsigned seed, double tol, Fn&& fn) {
  Outcome o;
  for (const auto& [pname, patch] : catalog::default_patches())
    for (const auto& [rname, rot] : catalog::default_rotation_specs()) {
      ShellConfig cfg = make_shell_config(patch, rot);
      std::mt19937 rng(check_seed(seed, pname + "/" + rname));
      for (int s = 0; s < samples; ++s) {
        Vec2 x = catalog::random_interior_point(patch.domain, rng);
        double r = fn(cfg, x, rng);
        record(o, r, tol,
               where_str("patch=" + pname + " rotation=" + rname, x));
      }
    }
  return o;
}

// ---- curl3d checks ----

Outcome chk_curl_grad_zero(int samples, unsigned seed, double tol, Fault) {
  return for_charts(samples, seed, tol,
                    [](const std::string&, const Chart3& chart, const Vec3& x,
                       std::mt19937& rng) {
                      VecField3 v = catalog::random_poly_vec3(rng);
                      MatField3 grad{[v, chart](const Vec3& y) {
                        ChartFrames f = frames_at(chart, y);
                        Mat3 g;
                        for (int i = 0; i < 3; ++i)
                          g += dyad(v.deriv(i, y), f.g_up[i]);
                        return g;
                      },
                                     {}};
                      return norm(curl_tensor(grad, chart, x));
                    });
}

Outcome chk_curl_components(int samples, unsigned seed, double tol,
                            Fault fault, ComponentRoute route) {
  return for_charts(
      samples, seed, tol,
      [fault, route](const std::string&, const Chart3& chart, const Vec3& x,
                     std::mt19937& rng) {
        MatField3 t = catalog::random_poly_mat3(rng);
        Mat3 direct = fault == Fault::CurlTranspose
                          ? curl_tensor_transposed(t, chart, x)
                          : curl_tensor(t, chart, x);
        return norm(direct - curl_tensor_components(t, chart, x, route));
      });
}

Outcome chk_curl_rows(int samples, unsigned seed, double tol, Fault fault,
                      RowRoute route) {
  return for_charts(
      samples, seed, tol,
      [fault, route](const std::string&, const Chart3& chart, const Vec3& x,
                     std::mt19937& rng) {
        MatField3 t = catalog::random_poly_mat3(rng);
        Mat3 direct = fault == Fault::CurlTranspose
                          ? curl_tensor_transposed(t, chart, x)
                          : curl_tensor(t, chart, x);
        return norm(direct - curl_rowwise(t, chart, x, route));
      });
}

// identity chart: Curl T must reduce to the Cartesian index formula
// (Curl T)_{rj} = e_{jil} dT_{rl}/dx_i
Outcome chk_curl_cartesian(int samples, unsigned seed, double tol, Fault) {
  Outcome o;
  Chart3 chart = catalog::make_chart("identity");
  std::mt19937 rng(check_seed(seed, "identity-cartesian"));
  for (int s = 0; s < samples; ++s) {
    Vec3 x = catalog::random_interior_point(chart.domain, rng);
    MatField3 t = catalog::random_poly_mat3(rng);
    Mat3 cart;
    for (int r = 0; r < 3; ++r)
      for (int j = 0; j < 3; ++j) {
        double sum = 0.0;
        for (int i = 0; i < 3; ++i)
          for (int l = 0; l < 3; ++l)
            sum += levi_civita(j, i, l) * t.deriv(i, x)(r, l);
        cart(r, j) = sum;
      }
    double res = norm(curl_tensor(t, chart, x) - cart);
    record(o, res, tol, where_str("chart=identity", x));
  }
  return o;
}

// ---- cosserat3d checks ----

Outcome chk_wryness_routes(int samples, unsigned seed, double tol, Fault) {
  return for_chart_rotations(
      samples, seed, tol, [](const Config3D& cfg, const Vec3& x, std::mt19937&) {
        return max_pairwise({wryness(cfg, x, WrynessRoute::AxlGradient),
                             wryness(cfg, x, WrynessRoute::Directors),
                             wryness(cfg, x, WrynessRoute::Omega)});
      });
}

Outcome chk_dislocation_routes3d(int samples, unsigned seed, double tol,
                                 Fault) {
  return for_chart_rotations(
      samples, seed, tol, [](const Config3D& cfg, const Vec3& x, std::mt19937&) {
        return max_pairwise(
            {dislocation_density(cfg, x, DislocationRoute::Curl),
             dislocation_density(cfg, x, DislocationRoute::Directors)});
      });
}

Outcome chk_nye3d(int samples, unsigned seed, double tol, Fault) {
  return for_chart_rotations(
      samples, seed, tol, [](const Config3D& cfg, const Vec3& x, std::mt19937&) {
        Mat3 gamma = wryness(cfg, x);
        Mat3 d = dislocation_density(cfg, x);
        NyeResiduals r = nye_check(gamma, d);
        return std::max(r.forward, r.inverse);
      });
}

Outcome chk_trace_factor3d(int samples, unsigned seed, double tol, Fault) {
  return for_chart_rotations(
      samples, seed, tol, [](const Config3D& cfg, const Vec3& x, std::mt19937&) {
        return std::fabs(trace(dislocation_density(cfg, x)) -
                         2.0 * trace(wryness(cfg, x)));
      });
}

Outcome chk_strain_director3d(int samples, unsigned seed, double tol, Fault) {
  return for_chart_rotations(
      samples, seed, tol, [](const Config3D& cfg, const Vec3& x, std::mt19937&) {
        return norm(strain_measures(cfg, x).Ee - strain_director_form(cfg, x));
      });
}

Outcome chk_frame_indifference3d(int samples, unsigned seed, double tol,
                                 Fault) {
  return for_chart_rotations(
      samples, seed, tol,
      [](const Config3D& cfg, const Vec3& x, std::mt19937& rng) {
        Mat3 r = catalog::random_rotation(rng);
        Config3D rotated = cfg;
        VecField3 phi = cfg.phi;
        MatField3 qe = cfg.Qe;
        rotated.phi = {[r, phi](const Vec3& y) { return r * phi(y); },
                       [r, phi](int i, const Vec3& y) {
                         return r * phi.deriv(i, y);
                       }};
        rotated.Qe = {[r, qe](const Vec3& y) { return r * qe(y); },
                      [r, qe](int i, const Vec3& y) {
                        return r * qe.deriv(i, y);
                      }};
        Measures3D a = measures_at(cfg, x);
        Measures3D b = measures_at(rotated, x);
        return std::max({norm(a.Ee - b.Ee), norm(a.wryness - b.wryness),
                         norm(a.dislocation - b.dislocation)});
      });
}

// ---- surface checks ----

Outcome chk_alternator(int samples, unsigned seed, double tol, Fault) {
  return for_patches(samples, seed, tol,
                     [](const std::string&, const SurfacePatch& patch,
                        const Vec2& x, std::mt19937&) {
                       SurfaceFrames f = surf_frames(patch, x);
                       return norm(f.alternator * f.alternator + f.first);
                     });
}

Outcome chk_normal_deriv(int samples, unsigned seed, double tol, Fault) {
  return for_patches(
      samples, seed, tol,
      [](const std::string&, const SurfacePatch& patch, const Vec2& x,
         std::mt19937&) {
        SurfaceFrames f = surf_frames(patch, x);
        double res = 0.0;
        for (int g = 0; g < 2; ++g) {
          double h = fd_step(norm(x));
          Vec2 xp = x, xm = x;
          xp[g] += h;
          xm[g] -= h;
          Vec3 dn = (surf_frames(patch, xp).n0 - surf_frames(patch, xm).n0) *
                    (0.5 / h);
          Vec3 pred = -(f.b_mix[0][g] * f.a_lo[0] + f.b_mix[1][g] * f.a_lo[1]);
          res = std::max(res, norm(dn - pred));
        }
        return res;
      });
}

Outcome chk_grad_midsurface(int samples, unsigned seed, double tol, Fault) {
  return for_patches(samples, seed, tol,
                     [](const std::string&, const SurfacePatch& patch,
                        const Vec2& x, std::mt19937&) {
                       SurfaceFrames f = surf_frames(patch, x);
                       return norm(grad_s(midsurface_field(patch), patch, x) -
                                   f.first);
                     });
}

Outcome chk_surf_curl_vec(int samples, unsigned seed, double tol, Fault) {
  return for_patches(samples, seed, tol,
                     [](const std::string&, const SurfacePatch& patch,
                        const Vec2& x, std::mt19937& rng) {
                       SurfVecField v = catalog::random_poly_vec2(rng);
                       return norm(curl_s_vec(v, patch, x) -
                                   curl_s_vec_components(v, patch, x));
                     });
}

Outcome chk_surf_curl_tensor(int samples, unsigned seed, double tol, Fault) {
  return for_patches(
      samples, seed, tol,
      [](const std::string&, const SurfacePatch& patch, const Vec2& x,
         std::mt19937& rng) {
        SurfMatField t = catalog::random_poly_mat2(rng);
        return max_pairwise(
            {curl_s_tensor(t, patch, x, SurfCurlRoute::Direct),
             curl_s_tensor(t, patch, x, SurfCurlRoute::CovariantComp),
             curl_s_tensor(t, patch, x, SurfCurlRoute::MixedComp),
             curl_s_tensor(t, patch, x, SurfCurlRoute::RowsCovariant),
             curl_s_tensor(t, patch, x, SurfCurlRoute::RowsMixed)});
      });
}

Outcome chk_surf_cov_deriv(int samples, unsigned seed, double tol, Fault) {
  return for_patches(
      samples, seed, tol,
      [](const std::string&, const SurfacePatch& patch, const Vec2& x,
         std::mt19937& rng) {
        SurfMatField t = catalog::random_poly_mat2(rng);
        double res = 0.0;
        for (int g = 0; g < 2; ++g)
          res = std::max(res, norm(surf_covariant_tensor_deriv(t, patch, x, g) -
                                   t.deriv(g, x)));
        return res;
      });
}

// ---- shell checks ----

Outcome chk_q0_normal(int samples, unsigned seed, double tol, Fault) {
  return for_patches(samples, seed, tol,
                     [](const std::string&, const SurfacePatch& patch,
                        const Vec2& x, std::mt19937&) {
                       SurfaceFrames f = surf_frames(patch, x);
                       Mat3 q0 = default_initial_rotation(patch, x);
                       return norm(q0 * basis_vector(2) - f.n0);
                     });
}

Outcome chk_shell_strain_director(int samples, unsigned seed, double tol,
                                  Fault) {
  return for_patch_rotations(
      samples, seed, tol,
      [](const ShellConfig& cfg, const Vec2& x, std::mt19937&) {
        return norm(shell_strain(cfg, x) - shell_strain_director_form(cfg, x));
      });
}

Outcome chk_bending_routes(int samples, unsigned seed, double tol, Fault) {
  return for_patch_rotations(
      samples, seed, tol,
      [](const ShellConfig& cfg, const Vec2& x, std::mt19937&) {
        return max_pairwise(
            {shell_bending_curvature(cfg, x, BendingRoute::AxlGradient),
             shell_bending_curvature(cfg, x, BendingRoute::Components),
             shell_bending_curvature(cfg, x, BendingRoute::Directors),
             shell_bending_curvature(cfg, x, BendingRoute::Omega)});
      });
}

Outcome chk_shell_dislocation_routes(int samples, unsigned seed, double tol,
                                     Fault fault) {
  return for_patch_rotations(
      samples, seed, tol,
      [fault](const ShellConfig& cfg, const Vec2& x, std::mt19937&) {
        Mat3 via_curl =
            shell_dislocation(cfg, x, ShellDislocationRoute::SurfaceCurl);
        Mat3 via_cross =
            shell_dislocation(cfg, x, ShellDislocationRoute::CrossProduct);
        if (fault == Fault::CrossProductSignFlip) via_cross = -via_cross;
        Mat3 via_dirs =
            shell_dislocation(cfg, x, ShellDislocationRoute::Directors);
        return max_pairwise({via_curl, via_cross, via_dirs});
      });
}

Outcome chk_shell_nye(int samples, unsigned seed, double tol, Fault fault) {
  return for_patch_rotations(
      samples, seed, tol,
      [fault](const ShellConfig& cfg, const Vec2& x, std::mt19937&) {
        Mat3 ke = shell_bending_curvature(cfg, x);
        Mat3 de = fault == Fault::NyeDropTrace
                      ? -transpose(ke)  // Nye map with the trace term dropped
                      : shell_dislocation(cfg, x);
        ShellNyeReport r = shell_nye(ke, de);
        return std::max(r.forward, r.inverse);
      });
}

Outcome chk_shell_nye_bundle(int samples, unsigned seed, double tol, Fault) {
  return for_patch_rotations(
      samples, seed, tol,
      [](const ShellConfig& cfg, const Vec2& x, std::mt19937&) {
        Mat3 ke = shell_bending_curvature(cfg, x);
        Mat3 de = shell_dislocation(cfg, x);
        ShellNyeReport r = shell_nye(ke, de);
        return std::max({r.trace_identity, r.skew_identity, r.devsym_identity,
                         r.norm_identity, r.lower_bound_slack,
                         r.upper_bound_slack});
      });
}

Outcome chk_planar_split(int samples, unsigned seed, double tol, Fault) {
  return for_patch_rotations(
      samples, seed, tol,
      [](const ShellConfig& cfg, const Vec2& x, std::mt19937&) {
        SurfaceFrames f = surf_frames(cfg.patch, x);
        Mat3 ke = shell_bending_curvature(cfg, x);
        Mat3 de = shell_dislocation(cfg, x);
        PlanarSplit sp = planar_split(de, ke, f);
        return std::max({sp.reassembly_residual, sp.mixed_residual,
                         sp.normal_action_residual});
      });
}

Outcome chk_cofactor(int samples, unsigned seed, double tol, Fault) {
  return for_patch_rotations(
      samples, seed, tol,
      [](const ShellConfig& cfg, const Vec2& x, std::mt19937&) {
        SurfaceFrames f = surf_frames(cfg.patch, x);
        Mat3 ke = shell_bending_curvature(cfg, x);
        Mat3 de = shell_dislocation(cfg, x);
        CofactorCheck cc = planar_cofactor_check(ke, de, f);
        double res = std::max(cc.planar_residual, cc.reassembly_residual);

        // characterizations and the involution on the planar part of Ke
        PlanarTensor s{f.first * ke * f.first, f};
        PlanarTensor ts = transform_T(s);
        res = std::max(res, norm(ts.tensor - transform_T_alternator(s)));
        res = std::max(res, norm(transform_T(ts).tensor - s.tensor));
        if (std::fabs(s.det2()) > 1e-6)
          res = std::max(res, norm(ts.tensor - transform_T_inverse(s)));
        return res;
      });
}

Outcome chk_frame_indifference_shell(int samples, unsigned seed, double tol,
                                     Fault) {
  return for_patch_rotations(
      samples, seed, tol,
      [](const ShellConfig& cfg, const Vec2& x, std::mt19937& rng) {
        Mat3 r = catalog::random_rotation(rng);
        ShellConfig rotated = cfg;
        SurfVecField m = cfg.m;
        SurfMatField qe = cfg.Qe;
        rotated.m = {[r, m](const Vec2& y) { return r * m(y); },
                     [r, m](int a, const Vec2& y) { return r * m.deriv(a, y); }};
        rotated.Qe = {[r, qe](const Vec2& y) { return r * qe(y); },
                      [r, qe](int a, const Vec2& y) {
                        return r * qe.deriv(a, y);
                      }};
        return std::max({norm(shell_strain(cfg, x) - shell_strain(rotated, x)),
                         norm(shell_bending_curvature(cfg, x) -
                              shell_bending_curvature(rotated, x)),
                         norm(shell_dislocation(cfg, x) -
                              shell_dislocation(rotated, x))});
      });
}

// ---- energy checks ----

EnergyParams random_params(std::mt19937& rng, double p) {
  std::uniform_real_distribution<double> u(0.2, 3.0);
  return EnergyParams::checked(u(rng), u(rng), u(rng), u(rng), u(rng), u(rng),
                               u(rng), p);
}

Mat3 random_mat(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = u(rng);
  return m;
}

Outcome chk_energy_zero(int samples, unsigned seed, double tol, Fault) {
  Outcome o;
  std::mt19937 rng(check_seed(seed, "energy_zero"));
  for (int s = 0; s < samples; ++s) {
    EnergyParams prm = random_params(rng, 2.0);
    record(o, std::fabs(energy_3d(Mat3::zero(), Mat3::zero(), prm)), tol,
           "zero strain/dislocation input");
  }
  return o;
}

Outcome chk_energy_positive(int samples, unsigned seed, double tol, Fault) {
  Outcome o;
  std::mt19937 rng(check_seed(seed, "energy_positive"));
  for (int s = 0; s < samples; ++s) {
    EnergyParams prm = random_params(rng, 2.0);
    Mat3 e = random_mat(rng), d = random_mat(rng);
    if (norm(e) + norm(d) < 1e-8) continue;
    record(o, energy_3d(e, d, prm) > 0.0 ? 0.0 : 1.0, tol,
           "random nonzero input");
  }
  return o;
}

Outcome chk_energy_homogeneity(int samples, unsigned seed, double tol, Fault) {
  Outcome o;
  std::mt19937 rng(check_seed(seed, "energy_homog"));
  std::uniform_real_distribution<double> ut(0.2, 4.0);
  for (int s = 0; s < samples; ++s) {
    EnergyParams prm = random_params(rng, 2.0);
    Mat3 e = random_mat(rng), d = random_mat(rng);
    double t = ut(rng);
    double w = energy_3d(e, d, prm);
    double wt = energy_3d(t * e, t * d, prm);
    record(o, std::fabs(wt - t * t * w) / std::max(1.0, t * t * w), tol,
           "scaled input");
  }
  return o;
}

Outcome chk_energy_params(int samples, unsigned seed, double tol, Fault) {
  Outcome o;
  (void)seed;
  for (int s = 0; s < std::min(samples, 1); ++s) {
    auto rejects = [](double mu, double kappa, double mu_c, double lc,
                      double p) {
      try {
        EnergyParams::checked(mu, kappa, mu_c, lc, 1, 1, 1, p);
        return false;
      } catch (const InvalidParams&) {
        return true;
      }
    };
    bool ok = rejects(-1, 1, 1, 1, 2) && rejects(1, 0, 1, 1, 2) &&
              rejects(1, 1, -2, 1, 2) && rejects(1, 1, 1, 0, 2) &&
              rejects(1, 1, 1, 1, 1.5);
    record(o, ok ? 0.0 : 1.0, tol, "parameter validation");
  }
  return o;
}

struct Check {
  std::string name;
  std::string suite;
  double tol;
  std::function<Outcome(int, unsigned, double, Fault)> fn;
};

std::vector<Check> all_checks() {
  using namespace std::placeholders;
  std::vector<Check> cs;
  auto add = [&cs](std::string name, std::string suite, double tol, auto fn) {
    cs.push_back({std::move(name), std::move(suite), tol, fn});
  };

  add("curl3d_grad_curl_zero", "curl3d", 1e-6, chk_curl_grad_zero);
  add("curl3d_component_covariant", "curl3d", 1e-6,
      [](int n, unsigned s, double t, Fault f) {
        return chk_curl_components(n, s, t, f, ComponentRoute::Covariant);
      });
  add("curl3d_component_mixed", "curl3d", 1e-6,
      [](int n, unsigned s, double t, Fault f) {
        return chk_curl_components(n, s, t, f, ComponentRoute::Mixed);
      });
  add("curl3d_rows_contravariant_carrier", "curl3d", 1e-6,
      [](int n, unsigned s, double t, Fault f) {
        return chk_curl_rows(n, s, t, f, RowRoute::ContravariantCarrier);
      });
  add("curl3d_rows_covariant_carrier", "curl3d", 1e-6,
      [](int n, unsigned s, double t, Fault f) {
        return chk_curl_rows(n, s, t, f, RowRoute::CovariantCarrier);
      });
  add("curl3d_cartesian_reduction", "curl3d", 1e-12, chk_curl_cartesian);

  add("cosserat3d_wryness_routes", "cosserat3d", 1e-6, chk_wryness_routes);
  add("cosserat3d_dislocation_routes", "cosserat3d", 1e-6,
      chk_dislocation_routes3d);
  add("cosserat3d_nye", "cosserat3d", 1e-6, chk_nye3d);
  add("cosserat3d_trace_factor", "cosserat3d", 1e-6, chk_trace_factor3d);
  add("cosserat3d_strain_director_form", "cosserat3d", 1e-8,
      chk_strain_director3d);
  add("cosserat3d_frame_indifference", "cosserat3d", 1e-10,
      chk_frame_indifference3d);

  add("surface_alternator_identity", "surface", 1e-12, chk_alternator);
  add("surface_normal_derivative", "surface", 1e-6, chk_normal_deriv);
  add("surface_grad_midsurface", "surface", 1e-8, chk_grad_midsurface);
  add("surface_curl_vec_components", "surface", 1e-6, chk_surf_curl_vec);
  add("surface_curl_tensor_routes", "surface", 1e-6, chk_surf_curl_tensor);
  add("surface_covariant_derivative", "surface", 1e-6, chk_surf_cov_deriv);

  add("shell_q0_normal", "shell", 1e-10, chk_q0_normal);
  add("shell_strain_director_form", "shell", 1e-8, chk_shell_strain_director);
  add("shell_bending_routes", "shell", 1e-6, chk_bending_routes);
  add("shell_dislocation_routes", "shell", 1e-6, chk_shell_dislocation_routes);
  add("shell_nye", "shell", 1e-6, chk_shell_nye);
  add("shell_nye_bundle", "shell", 1e-6, chk_shell_nye_bundle);
  add("shell_planar_split", "shell", 1e-6, chk_planar_split);
  add("shell_cofactor", "shell", 1e-6, chk_cofactor);
  add("shell_frame_indifference", "shell", 1e-10,
      chk_frame_indifference_shell);

  add("energy_zero_reference", "energy", 1e-15, chk_energy_zero);
  add("energy_positivity", "energy", 0.5, chk_energy_positive);
  add("energy_quadratic_homogeneity", "energy", 1e-10, chk_energy_homogeneity);
  add("energy_parameter_validation", "energy", 0.5, chk_energy_params);

  std::sort(cs.begin(), cs.end(),
            [](const Check& a, const Check& b) { return a.name < b.name; });
  return cs;
}

int thread_count() {
  const char* env = std::getenv("COSSERAT_THREADS");
  long n = env ? std::strtol(env, nullptr, 10) : 0;
  if (n <= 0) n = static_cast<long>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  return static_cast<int>(n);
}

}  // namespace

Fault fault_from_name(const std::string& name) {
  if (name.empty() || name == "none") return Fault::None;
  if (name == "cross_sign_flip") return Fault::CrossProductSignFlip;
  if (name == "nye_drop_trace") return Fault::NyeDropTrace;
  if (name == "curl_transpose") return Fault::CurlTranspose;
  throw InvalidParams("unknown fault '" + name + "'");
}

std::vector<std::string> fault_names() {
  return {"cross_sign_flip", "nye_drop_trace", "curl_transpose"};
}

std::vector<std::string> suite_names() {
  return {"curl3d", "cosserat3d", "surface", "shell", "energy", "all"};
}

ValidationReport run_validation(const std::string& suite, int samples,
                                unsigned seed, Fault fault) {
  auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw InvalidParams("unknown validation suite '" + suite + "'");

  auto t0 = std::chrono::steady_clock::now();
  ValidationReport rep;
  if (samples <= 0) {  // vacuous pass
    rep.pass = true;
    rep.seconds = 0.0;
    return rep;
  }

  std::vector<Check> checks;
  for (auto& c : all_checks())
    if (suite == "all" || c.suite == suite) checks.push_back(std::move(c));

  rep.checks.resize(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= checks.size()) return;
      const Check& c = checks[k];
      auto s0 = std::chrono::steady_clock::now();
      Outcome o;
      try {
        o = c.fn(samples, seed, c.tol, fault);
      } catch (const std::exception& ex) {
        o.max_res = std::numeric_limits<double>::infinity();
        o.first = std::string("exception: ") + ex.what();
      }
      auto s1 = std::chrono::steady_clock::now();
      CheckResult& r = rep.checks[k];
      r.name = c.name;
      r.tol = c.tol;
      r.max_residual = o.max_res;
      r.samples = o.n;
      r.pass = o.max_res <= c.tol;
      r.first_failure = o.first;
      r.seconds = std::chrono::duration<double>(s1 - s0).count();
    }
  };

  int nthreads = std::min<int>(thread_count(), static_cast<int>(checks.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  rep.pass = true;
  for (const auto& r : rep.checks) rep.pass = rep.pass && r.pass;
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

}  // namespace cosserat
