#pragma once

#include <optional>

#include "json.hpp"

#include "cosserat/cosserat3d.hpp"
#include "cosserat/energy.hpp"
#include "cosserat/minimize.hpp"
#include "cosserat/shell.hpp"

namespace cosserat {

// Evaluation setup parsed from a "cosserat-curvature/1" JSON config:
// either a 3D body over a chart or a shell over a patch, built from the
// named catalog families. All parse failures raise SchemaError with a
// JSON pointer to the offending field.
struct EvalConfig {
  enum Kind { Chart3D, Shell } kind = Chart3D;
  Config3D body;      // kind == Chart3D
  ShellConfig shell;  // kind == Shell
  std::optional<EnergyParams> energy;
};

EvalConfig parse_eval_config(const nlohmann::json& j);

struct MinimizeConfig {
  SurfacePatch patch;
  int n1 = 8, n2 = 8;
  EnergyParams params{1, 1, 1, 1, 1, 1, 1, 2};
  double perturb_amplitude = 0.0;
  unsigned seed = 0;
  MinimizeOptions options;
};

MinimizeConfig parse_minimize_config(const nlohmann::json& j);

// [[u, v]] or [[x, y, z]] point lists for eval
std::vector<Vec3> parse_points3(const nlohmann::json& j);
std::vector<Vec2> parse_points2(const nlohmann::json& j);

}  // namespace cosserat
