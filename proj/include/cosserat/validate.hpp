#pragma once

#include <string>
#include <vector>

namespace cosserat {

// Deliberate single-route corruptions used to prove the validation checks
// are not vacuous: each fault must make at least one named check fail.
enum class Fault {
  None,
  CrossProductSignFlip,   // flipped sign in the shell dislocation cross-product route
  NyeDropTrace,  // shell Nye map with the trace term dropped
  CurlTranspose   // transposed tensor Curl convention
};

Fault fault_from_name(const std::string& name);
std::vector<std::string> fault_names();
std::vector<std::string> suite_names();

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tol = 0.0;
  bool pass = true;
  int samples = 0;
  double seconds = 0.0;
  std::string first_failure;  // catalog entry + point of the first violation
};

struct ValidationReport {
  std::vector<CheckResult> checks;  // sorted by name
  bool pass = true;
  double seconds = 0.0;
};

// Runs every invariant check of the named suite (or "all") over the
// catalog at `samples` seeded random points per catalog combination.
// Checks may run in parallel (COSSERAT_THREADS caps the pool, 0 = auto);
// the report is deterministic for fixed (suite, samples, seed, fault).
ValidationReport run_validation(const std::string& suite, int samples,
                                unsigned seed, Fault fault = Fault::None);

}  // namespace cosserat
