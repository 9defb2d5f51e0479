#include "cosserat/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cosserat/errors.hpp"

namespace cosserat {

ShellState ShellState::flat_reference(const SurfacePatch& patch, int n1,
                                      int n2) {
  ShellState s;
  s.n1 = n1;
  s.n2 = n2;
  s.origin = patch.domain.lo;
  s.h1 = (patch.domain.hi.u - patch.domain.lo.u) / (n1 - 1);
  s.h2 = (patch.domain.hi.v - patch.domain.lo.v) / (n2 - 1);
  s.m.resize(static_cast<std::size_t>(n1 * n2));
  s.q.resize(static_cast<std::size_t>(n1 * n2));
  s.fix_m.assign(static_cast<std::size_t>(n1 * n2), 0);
  s.fix_q.assign(static_cast<std::size_t>(n1 * n2), 0);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) s.m[s.idx(i, j)] = patch.y0(s.param(i, j));
  return s;
}

void ShellState::clamp_boundary() {
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      if (boundary(i, j)) {
        fix_m[idx(i, j)] = 1;
        fix_q[idx(i, j)] = 1;
      }
}

void ShellState::perturb_rotations(double amplitude, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uang(0.0, amplitude);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      int k = idx(i, j);
      if (fix_q[k]) continue;
      Vec3 axis(gauss(rng), gauss(rng), gauss(rng));
      double n = norm(axis);
      if (n < 1e-12) axis = Vec3(0, 0, 1);
      else axis = axis / n;
      q[k] = (Quat::from_rotvec(uang(rng) * axis) * q[k]).normalized();
    }
}

void ShellState::renormalize() {
  for (auto& qi : q) qi = qi.normalized();
}

namespace {

// Energy density contribution of one interior quadrature node, including
// the area weight.
double point_energy(const ShellState& s, const SurfacePatch& patch,
                    const EnergyParams& prm, int i, int j) {
  SurfaceFrames f = surf_frames(patch, s.param(i, j));

  Vec3 m1 = (s.m[s.idx(i + 1, j)] - s.m[s.idx(i - 1, j)]) * (0.5 / s.h1);
  Vec3 m2 = (s.m[s.idx(i, j + 1)] - s.m[s.idx(i, j - 1)]) * (0.5 / s.h2);
  Mat3 grad = dyad(m1, f.a_up[0]) + dyad(m2, f.a_up[1]);

  Mat3 qm = s.q[s.idx(i, j)].to_matrix();
  Mat3 q1 = (s.q[s.idx(i + 1, j)].to_matrix() -
             s.q[s.idx(i - 1, j)].to_matrix()) *
            (0.5 / s.h1);
  Mat3 q2 = (s.q[s.idx(i, j + 1)].to_matrix() -
             s.q[s.idx(i, j - 1)].to_matrix()) *
            (0.5 / s.h2);

  Mat3 qt = transpose(qm);
  Mat3 strain = qt * grad - f.first;
  Mat3 disl = -tensor_cross_vector(qt * q1, f.a_up[0]) -
              tensor_cross_vector(qt * q2, f.a_up[1]);
  return energy_shell(strain, disl, prm) * f.area * s.h1 * s.h2;
}

bool interior(const ShellState& s, int i, int j) {
  return i >= 1 && j >= 1 && i <= s.n1 - 2 && j <= s.n2 - 2;
}

// Sum of the quadrature contributions that depend on node (i, j):
// the node itself and its 4-neighborhood, clipped to the interior.
double local_energy(const ShellState& s, const SurfacePatch& patch,
                    const EnergyParams& prm, int i, int j) {
  static const int offs[5][2] = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  double e = 0.0;
  for (auto& o : offs) {
    int a = i + o[0], b = j + o[1];
    if (interior(s, a, b)) e += point_energy(s, patch, prm, a, b);
  }
  return e;
}

constexpr double kGradDelta = 1e-6;

struct DofMap {
  // per free dof: node index, kind (0 = position, 1 = rotation), component
  struct Dof {
    int node;
    int kind;
    int comp;
  };
  std::vector<Dof> dofs;

  explicit DofMap(const ShellState& s) {
    for (int k = 0; k < s.n1 * s.n2; ++k) {
      if (!s.fix_m[static_cast<std::size_t>(k)])
        for (int c = 0; c < 3; ++c) dofs.push_back({k, 0, c});
      if (!s.fix_q[static_cast<std::size_t>(k)])
        for (int c = 0; c < 3; ++c) dofs.push_back({k, 1, c});
    }
  }
};

void apply_dof_offset(ShellState& s, const DofMap::Dof& d, double delta) {
  if (d.kind == 0) {
    s.m[static_cast<std::size_t>(d.node)][d.comp] += delta;
  } else {
    Vec3 rv;
    rv[d.comp] = delta;
    auto& qn = s.q[static_cast<std::size_t>(d.node)];
    qn = (Quat::from_rotvec(rv) * qn).normalized();
  }
}

std::vector<double> gradient(const ShellState& state,
                             const SurfacePatch& patch,
                             const EnergyParams& prm, const DofMap& map) {
  std::vector<double> g(map.dofs.size());
  ShellState work = state;
  for (std::size_t k = 0; k < map.dofs.size(); ++k) {
    const auto& d = map.dofs[k];
    int i = d.node / state.n2, j = d.node % state.n2;

    Vec3 m_save = work.m[static_cast<std::size_t>(d.node)];
    Quat q_save = work.q[static_cast<std::size_t>(d.node)];

    apply_dof_offset(work, d, kGradDelta);
    double ep = local_energy(work, patch, prm, i, j);
    work.m[static_cast<std::size_t>(d.node)] = m_save;
    work.q[static_cast<std::size_t>(d.node)] = q_save;

    apply_dof_offset(work, d, -kGradDelta);
    double em = local_energy(work, patch, prm, i, j);
    work.m[static_cast<std::size_t>(d.node)] = m_save;
    work.q[static_cast<std::size_t>(d.node)] = q_save;

    g[k] = (ep - em) / (2.0 * kGradDelta);
  }
  return g;
}

ShellState stepped(const ShellState& s, const DofMap& map,
                   const std::vector<double>& dir, double t) {
  ShellState r = s;
  for (std::size_t k = 0; k < map.dofs.size(); ++k) {
    const auto& d = map.dofs[k];
    if (d.kind == 0) {
      r.m[static_cast<std::size_t>(d.node)][d.comp] += t * dir[k];
    }
  }
  // rotation dofs of one node are applied as a single rotation vector
  for (std::size_t k = 0; k < map.dofs.size(); ++k) {
    const auto& d = map.dofs[k];
    if (d.kind != 1 || d.comp != 0) continue;
    Vec3 rv(t * dir[k], t * dir[k + 1], t * dir[k + 2]);
    auto& qn = r.q[static_cast<std::size_t>(d.node)];
    qn = (Quat::from_rotvec(rv) * qn).normalized();
  }
  return r;
}

double dot_vec(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

double total_energy(const ShellState& state, const SurfacePatch& patch,
                    const EnergyParams& params) {
  double e = 0.0;
  for (int i = 1; i <= state.n1 - 2; ++i)
    for (int j = 1; j <= state.n2 - 2; ++j)
      e += point_energy(state, patch, params, i, j);
  return e;
}

std::vector<double> fd_gradient(const ShellState& state,
                                const SurfacePatch& patch,
                                const EnergyParams& params) {
  DofMap map(state);
  return gradient(state, patch, params, map);
}

MinimizeReport minimize(const ShellState& state0, const SurfacePatch& patch,
                        const EnergyParams& params,
                        const MinimizeOptions& options) {
  MinimizeReport rep;
  ShellState cur = state0;
  cur.renormalize();
  DofMap map(cur);

  double energy = total_energy(cur, patch, params);
  rep.initial_energy = energy;

  std::vector<double> g = gradient(cur, patch, params, map);
  double gnorm = std::sqrt(dot_vec(g, g));
  rep.trace.push_back({energy, gnorm, 0.0});

  std::vector<double> g_prev, dir_prev;
  double t_prev = 0.0;
  double t_trial = 1.0;

  int it = 0;
  for (; it < options.max_iter && gnorm >= options.grad_tol; ++it) {
    std::vector<double> dir(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) dir[k] = -g[k];

    // Barzilai-Borwein trial step from the previous applied increment
    if (!g_prev.empty() && t_prev > 0.0) {
      double sy = 0.0, ss = 0.0;
      for (std::size_t k = 0; k < g.size(); ++k) {
        double s_k = t_prev * dir_prev[k];
        double y_k = g[k] - g_prev[k];
        sy += s_k * y_k;
        ss += s_k * s_k;
      }
      if (sy > 0.0) t_trial = std::clamp(ss / sy, 1e-12, 1e6);
    }

    // Armijo backtracking on the energy
    constexpr double c_armijo = 1e-4;
    double t = t_trial;
    double e_new = 0.0;
    ShellState next;
    bool accepted = false;
    while (t >= 1e-16) {
      next = stepped(cur, map, dir, t);
      e_new = total_energy(next, patch, params);
      if (e_new <= energy - c_armijo * t * gnorm * gnorm) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted)
      throw LineSearchStalled(
          "minimize: no step above 1e-16 decreases the energy");

    g_prev = g;
    dir_prev = dir;
    t_prev = t;

    cur = next;
    energy = e_new;
    g = gradient(cur, patch, params, map);
    gnorm = std::sqrt(dot_vec(g, g));
    rep.trace.push_back({energy, gnorm, t});
  }

  rep.final_state = cur;
  rep.converged = gnorm < options.grad_tol;
  rep.final_energy = energy;
  rep.final_grad_norm = gnorm;
  rep.iterations = it;
  return rep;
}

}  // namespace cosserat
