#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cosserat/config.hpp"
#include "cosserat/cosserat3d.hpp"
#include "cosserat/errors.hpp"
#include "cosserat/json_io.hpp"
#include "cosserat/minimize.hpp"
#include "cosserat/shell.hpp"
#include "cosserat/validate.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSolverStall = 3;

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cosserat::SchemaError("cannot open file '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& ex) {
    throw cosserat::SchemaError("invalid JSON in '" + path + "': " +
                                ex.what());
  }
}

// `spec` is either inline JSON (starts with '[') or a path to a JSON file
nlohmann::json load_points(const std::string& spec) {
  std::string s = spec;
  auto first = s.find_first_not_of(" \t\n");
  if (first != std::string::npos && s[first] == '[') {
    try {
      return nlohmann::json::parse(s);
    } catch (const nlohmann::json::parse_error& ex) {
      throw cosserat::SchemaError(std::string("invalid inline point list: ") +
                                  ex.what());
    }
  }
  return load_json_file(spec);
}

int run_validate(const std::string& suite, int samples, unsigned seed,
                 const std::string& fault_name) {
  cosserat::Fault fault = cosserat::fault_from_name(fault_name);
  cosserat::ValidationReport rep =
      cosserat::run_validation(suite, samples, seed, fault);
  std::cout << cosserat::canonical_dump(cosserat::report_json(rep)) << "\n";
  return rep.pass ? kExitPass : kExitValidationFailure;
}

nlohmann::json eval_chart3d(const cosserat::EvalConfig& cfg,
                            const nlohmann::json& points) {
  nlohmann::json results = nlohmann::json::array();
  for (const cosserat::Vec3& x : cosserat::parse_points3(points)) {
    cosserat::Measures3D m = cosserat::measures_at(cfg.body, x);
    cosserat::NyeResiduals nr = cosserat::nye_check(m.wryness, m.dislocation);
    nlohmann::json r;
    r["point"] = cosserat::vec3_json(x);
    r["F"] = cosserat::mat3_json(m.F);
    r["Ue"] = cosserat::mat3_json(m.Ue);
    r["Ee"] = cosserat::mat3_json(m.Ee);
    r["wryness"] = cosserat::mat3_json(m.wryness);
    r["dislocation"] = cosserat::mat3_json(m.dislocation);
    r["nye"] = {{"forward", nr.forward}, {"inverse", nr.inverse}};
    if (cfg.energy)
      r["energy"] = cosserat::energy_3d(m.Ee, m.dislocation, *cfg.energy);
    results.push_back(r);
  }
  return results;
}

nlohmann::json eval_shell(const cosserat::EvalConfig& cfg,
                          const nlohmann::json& points) {
  nlohmann::json results = nlohmann::json::array();
  for (const cosserat::Vec2& x : cosserat::parse_points2(points)) {
    cosserat::SurfaceFrames f = cosserat::surf_frames(cfg.shell.patch, x);
    cosserat::Mat3 ee = cosserat::shell_strain(cfg.shell, x);
    cosserat::Mat3 ke = cosserat::shell_bending_curvature(cfg.shell, x);
    cosserat::Mat3 de = cosserat::shell_dislocation(cfg.shell, x);
    cosserat::ShellNyeReport nr = cosserat::shell_nye(ke, de);
    cosserat::PlanarSplit sp = cosserat::planar_split(de, ke, f);
    nlohmann::json r;
    r["point"] = nlohmann::json::array({x.u, x.v});
    r["Ee"] = cosserat::mat3_json(ee);
    r["Ke"] = cosserat::mat3_json(ke);
    r["De"] = cosserat::mat3_json(de);
    r["nye"] = {{"forward", nr.forward},
                {"inverse", nr.inverse},
                {"trace_identity", nr.trace_identity},
                {"skew_identity", nr.skew_identity},
                {"devsym_identity", nr.devsym_identity},
                {"norm_identity", nr.norm_identity}};
    r["planar"] = {{"D_planar", cosserat::mat3_json(sp.d_planar)},
                   {"K_planar", cosserat::mat3_json(sp.k_planar)},
                   {"d_a3", nlohmann::json::array({sp.d_a3[0], sp.d_a3[1]})},
                   {"k_3a", nlohmann::json::array({sp.k_3a[0], sp.k_3a[1]})},
                   {"trace_part", sp.trace_part}};
    if (cfg.energy)
      r["energy"] = cosserat::energy_shell(ee, de, *cfg.energy);
    results.push_back(r);
  }
  return results;
}

int run_eval(const std::string& config_path, const std::string& points_spec) {
  cosserat::EvalConfig cfg =
      cosserat::parse_eval_config(load_json_file(config_path));
  nlohmann::json points = load_points(points_spec);
  nlohmann::json out;
  out["schema"] = "cosserat-curvature/1";
  if (cfg.kind == cosserat::EvalConfig::Chart3D) {
    out["kind"] = "chart3d";
    out["results"] = eval_chart3d(cfg, points);
  } else {
    out["kind"] = "shell";
    out["results"] = eval_shell(cfg, points);
  }
  std::cout << cosserat::canonical_dump(out) << "\n";
  return kExitPass;
}

int run_minimize(const std::string& config_path, const std::string& out_dir) {
  cosserat::MinimizeConfig cfg =
      cosserat::parse_minimize_config(load_json_file(config_path));

  cosserat::ShellState state =
      cosserat::ShellState::flat_reference(cfg.patch, cfg.n1, cfg.n2);
  state.clamp_boundary();
  if (cfg.perturb_amplitude > 0.0)
    state.perturb_rotations(cfg.perturb_amplitude, cfg.seed);

  std::filesystem::create_directories(out_dir);
  auto report_path = std::filesystem::path(out_dir) / "report.json";
  auto trace_path = std::filesystem::path(out_dir) / "trace.csv";

  try {
    cosserat::MinimizeReport rep =
        cosserat::minimize(state, cfg.patch, cfg.params, cfg.options);
    std::ofstream(report_path)
        << cosserat::canonical_dump(cosserat::minimize_report_json(rep))
        << "\n";
    std::ofstream(trace_path) << cosserat::trace_csv(rep);
    std::cout << "converged=" << (rep.converged ? "true" : "false")
              << " iterations=" << rep.iterations
              << " final_energy=" << rep.final_energy
              << " final_grad_norm=" << rep.final_grad_norm << "\n";
    return rep.converged ? kExitPass : kExitValidationFailure;
  } catch (const cosserat::LineSearchStalled& ex) {
    nlohmann::json j;
    j["schema"] = "cosserat-curvature/1";
    j["converged"] = false;
    j["error"] = std::string("line_search_stalled: ") + ex.what();
    std::ofstream(report_path) << cosserat::canonical_dump(j) << "\n";
    std::cerr << "error: " << ex.what() << "\n";
    return kExitSolverStall;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cosserat curvature measures: validation, evaluation and "
               "shell energy minimization"};
  app.require_subcommand(1);

  std::string suite = "all";
  int samples = 50;
  unsigned seed = 1;
  std::string fault;
  CLI::App* validate = app.add_subcommand("validate", "run invariant checks");
  validate->add_option("--suite", suite,
                       "curl3d | cosserat3d | surface | shell | energy | all");
  validate->add_option("--samples", samples, "random points per combination");
  validate->add_option("--seed", seed, "RNG seed");
  validate->add_option("--inject-fault", fault,
                       "cross_sign_flip | nye_drop_trace | curl_transpose");

  std::string eval_config, eval_points;
  CLI::App* eval = app.add_subcommand("eval", "evaluate measures at points");
  eval->add_option("--config", eval_config, "JSON config path")->required();
  eval->add_option("--points", eval_points,
                   "JSON point list (inline or file path)")
      ->required();

  std::string min_config, min_out = ".";
  CLI::App* minimize =
      app.add_subcommand("minimize", "relax a discretized shell");
  minimize->add_option("--config", min_config, "JSON config path")->required();
  minimize->add_option("--out", min_out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return run_validate(suite, samples, seed, fault);
    if (eval->parsed()) return run_eval(eval_config, eval_points);
    if (minimize->parsed()) return run_minimize(min_config, min_out);
  } catch (const cosserat::SchemaError& ex) {
    std::cerr << "schema error: " << ex.what() << "\n";
    return kExitInputError;
  } catch (const cosserat::InvalidParams& ex) {
    std::cerr << "invalid parameters: " << ex.what() << "\n";
    return kExitInputError;
  } catch (const cosserat::OutOfDomain& ex) {
    std::cerr << "out of domain: " << ex.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
