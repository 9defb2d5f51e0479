#include "cosserat/config.hpp"

#include <string>
#include <vector>

#include "cosserat/catalog.hpp"
#include "cosserat/errors.hpp"

namespace cosserat {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& ptr, const std::string& what) {
  throw SchemaError(ptr + ": " + what);
}

const json& member(const json& j, const std::string& ptr,
                   const std::string& key) {
  if (!j.is_object()) fail(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(ptr + "/" + key, "missing required field");
  return *it;
}

std::string string_at(const json& j, const std::string& ptr,
                      const std::string& key) {
  const json& v = member(j, ptr, key);
  if (!v.is_string()) fail(ptr + "/" + key, "expected a string");
  return v.get<std::string>();
}

double number_at(const json& j, const std::string& ptr,
                 const std::string& key) {
  const json& v = member(j, ptr, key);
  if (!v.is_number()) fail(ptr + "/" + key, "expected a number");
  return v.get<double>();
}

double number_or(const json& j, const std::string& ptr, const std::string& key,
                 double fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number()) fail(ptr + "/" + key, "expected a number");
  return v.get<double>();
}

std::vector<double> params_of(const json& j, const std::string& ptr) {
  std::vector<double> p;
  if (!j.contains("params")) return p;
  const json& v = j.at("params");
  if (!v.is_array()) fail(ptr + "/params", "expected an array of numbers");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number())
      fail(ptr + "/params/" + std::to_string(i), "expected a number");
    p.push_back(v[i].get<double>());
  }
  return p;
}

Vec3 vec3_at(const json& j, const std::string& ptr, const std::string& key) {
  const json& v = member(j, ptr, key);
  if (!v.is_array() || v.size() != 3)
    fail(ptr + "/" + key, "expected an array of 3 numbers");
  for (int i = 0; i < 3; ++i)
    if (!v[i].is_number())
      fail(ptr + "/" + key + "/" + std::to_string(i), "expected a number");
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

catalog::AngleFn parse_angle(const json& j, const std::string& ptr) {
  if (!j.is_object()) fail(ptr, "expected an object {fn, coeff, coord}");
  std::string fn = string_at(j, ptr, "fn");
  catalog::AngleFn a;
  if (fn == "linear") a.kind = catalog::AngleFn::Linear;
  else if (fn == "sin") a.kind = catalog::AngleFn::Sin;
  else fail(ptr + "/fn", "expected 'linear' or 'sin'");
  a.coeff = number_at(j, ptr, "coeff");
  double coord = number_at(j, ptr, "coord");
  if (coord != 0.0 && coord != 1.0 && coord != 2.0)
    fail(ptr + "/coord", "expected coordinate index 0, 1 or 2");
  a.coord = static_cast<int>(coord);
  return a;
}

catalog::RotationSpec parse_rotation(const json& j, const std::string& ptr) {
  std::string family = string_at(j, ptr, "family");
  catalog::RotationSpec spec;
  if (family == "constant") {
    spec.kind = catalog::RotationSpec::Constant;
    spec.axis = vec3_at(j, ptr, "axis");
    spec.const_angle = number_at(j, ptr, "angle");
  } else if (family == "axis_angle") {
    spec.kind = catalog::RotationSpec::AxisAngle;
    spec.axis = vec3_at(j, ptr, "axis");
    spec.angle = parse_angle(member(j, ptr, "angle"), ptr + "/angle");
  } else if (family == "composed") {
    spec.kind = catalog::RotationSpec::Composed;
    const json& f = member(j, ptr, "first");
    const json& g = member(j, ptr, "second");
    spec.axis = vec3_at(f, ptr + "/first", "axis");
    spec.angle = parse_angle(member(f, ptr + "/first", "angle"),
                             ptr + "/first/angle");
    spec.axis2 = vec3_at(g, ptr + "/second", "axis");
    spec.angle2 = parse_angle(member(g, ptr + "/second", "angle"),
                              ptr + "/second/angle");
  } else {
    fail(ptr + "/family",
         "expected 'constant', 'axis_angle' or 'composed', got '" + family +
             "'");
  }
  return spec;
}

void check_schema_tag(const json& j) {
  std::string tag = string_at(j, "", "schema");
  if (tag != "cosserat-curvature/1")
    fail("/schema", "unsupported schema '" + tag +
                        "' (expected 'cosserat-curvature/1')");
}

Chart3 parse_chart(const json& j, const std::string& ptr) {
  std::string family = string_at(j, ptr, "family");
  try {
    return catalog::make_chart(family, params_of(j, ptr));
  } catch (const InvalidParams& ex) {
    fail(ptr, ex.what());
  }
}

SurfacePatch parse_patch(const json& j, const std::string& ptr) {
  std::string family = string_at(j, ptr, "family");
  try {
    return catalog::make_patch(family, params_of(j, ptr));
  } catch (const InvalidParams& ex) {
    fail(ptr, ex.what());
  }
}

EnergyParams parse_energy(const json& j, const std::string& ptr) {
  try {
    return EnergyParams::checked(
        number_at(j, ptr, "mu"), number_at(j, ptr, "kappa"),
        number_at(j, ptr, "mu_c"), number_at(j, ptr, "L_c"),
        number_at(j, ptr, "a1"), number_at(j, ptr, "a2"),
        number_at(j, ptr, "a3"), number_at(j, ptr, "p"));
  } catch (const InvalidParams& ex) {
    fail(ptr, ex.what());
  }
}

}  // namespace

EvalConfig parse_eval_config(const nlohmann::json& j) {
  check_schema_tag(j);
  std::string kind = string_at(j, "", "kind");
  EvalConfig cfg;
  if (kind == "chart3d") {
    cfg.kind = EvalConfig::Chart3D;
    Chart3 chart = parse_chart(member(j, "", "chart"), "/chart");
    cfg.body.chart = chart;
    cfg.body.phi = {[chart](const Vec3& x) { return chart.theta(x); },
                    [chart](int i, const Vec3& x) {
                      return chart.base_vector(i, x);
                    }};
    cfg.body.Qe =
        catalog::make_rotation3(parse_rotation(member(j, "", "rotation"),
                                               "/rotation"));
    if (j.contains("q0"))
      cfg.body.Q0 = catalog::make_rotation3(parse_rotation(j.at("q0"), "/q0"));
  } else if (kind == "shell") {
    cfg.kind = EvalConfig::Shell;
    SurfacePatch patch = parse_patch(member(j, "", "patch"), "/patch");
    SurfVecField mid{[patch](const Vec2& x) { return patch.y0(x); },
                     [patch](int a, const Vec2& x) { return patch.dy0(a, x); }};
    SurfMatField qe = catalog::make_rotation2(
        parse_rotation(member(j, "", "rotation"), "/rotation"));
    if (j.contains("q0")) {
      cfg.shell.patch = patch;
      cfg.shell.m = mid;
      cfg.shell.Qe = qe;
      cfg.shell.Q0 =
          catalog::make_rotation2(parse_rotation(j.at("q0"), "/q0"));
    } else {
      cfg.shell = ShellConfig::with_default_q0(patch, mid, qe);
    }
  } else {
    fail("/kind", "expected 'chart3d' or 'shell', got '" + kind + "'");
  }
  if (j.contains("energy"))
    cfg.energy = parse_energy(j.at("energy"), "/energy");
  return cfg;
}

MinimizeConfig parse_minimize_config(const nlohmann::json& j) {
  check_schema_tag(j);
  MinimizeConfig cfg;
  cfg.patch = parse_patch(member(j, "", "patch"), "/patch");

  const json& grid = member(j, "", "grid");
  double n1 = number_at(grid, "/grid", "n1");
  double n2 = number_at(grid, "/grid", "n2");
  if (n1 < 3 || n2 < 3 || n1 != static_cast<int>(n1) ||
      n2 != static_cast<int>(n2))
    fail("/grid", "n1 and n2 must be integers >= 3");
  cfg.n1 = static_cast<int>(n1);
  cfg.n2 = static_cast<int>(n2);

  cfg.params = parse_energy(member(j, "", "params"), "/params");
  if (cfg.params.p != 2.0)
    throw InvalidParams("minimize: the shell energy requires p = 2");

  if (j.contains("perturbation")) {
    const json& p = j.at("perturbation");
    cfg.perturb_amplitude = number_at(p, "/perturbation", "amplitude");
    cfg.seed = static_cast<unsigned>(
        number_or(p, "/perturbation", "seed", 0.0));
  }
  if (j.contains("options")) {
    const json& o = j.at("options");
    cfg.options.max_iter = static_cast<int>(
        number_or(o, "/options", "max_iter", cfg.options.max_iter));
    cfg.options.grad_tol =
        number_or(o, "/options", "grad_tol", cfg.options.grad_tol);
  }
  cfg.options.seed = cfg.seed;
  return cfg;
}

std::vector<Vec3> parse_points3(const nlohmann::json& j) {
  if (!j.is_array()) fail("/points", "expected an array of [x, y, z] points");
  std::vector<Vec3> pts;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& p = j[i];
    if (!p.is_array() || p.size() != 3)
      fail("/points/" + std::to_string(i), "expected [x, y, z]");
    pts.emplace_back(p[0].get<double>(), p[1].get<double>(),
                     p[2].get<double>());
  }
  return pts;
}

std::vector<Vec2> parse_points2(const nlohmann::json& j) {
  if (!j.is_array()) fail("/points", "expected an array of [u, v] points");
  std::vector<Vec2> pts;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& p = j[i];
    if (!p.is_array() || p.size() != 2)
      fail("/points/" + std::to_string(i), "expected [u, v]");
    pts.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return pts;
}

}  // namespace cosserat
