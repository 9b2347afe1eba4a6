#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "tecno/problems.hpp"
#include "tecno/solver.hpp"
#include "tecno/study.hpp"

namespace tecno {

/// Settings for a single run or a refinement study, read from an INI-style
/// file. Recognized keys:
///
///   [grid]     nx, ny
///   [problem]  name, flux, a, b, u_left, u_right
///   [flux]     d_low, d_high
///   [solver]   cfl, t_end, linf_bound, snapshot_interval,
///              entropy_rate_check, kruzkov_k (comma list), kruzkov_delta
///   [study]    ladder (e.g. "32x32, 64x64"), output, emit_snapshots
///
/// Anything else is a ConfigError.
struct ExperimentConfig {
  std::string problem = "advect-smooth";
  ProblemParameters params;
  int nx = 64;
  int ny = 64;
  SolverConfig solver;
  std::optional<double> linf_override;
  std::vector<Resolution> ladder;
  std::filesystem::path output = "out";
  bool emit_snapshots = false;

  StudyConfig study() const;
  ProblemSpec problem_spec() const { return make_problem(problem, params); }
  /// Solver settings with M resolved; throws ConfigError when invalid.
  SolverConfig run_solver() const;
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& file);

}  // namespace tecno
