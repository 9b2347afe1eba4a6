#pragma once

#include <compare>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tecno/diagnostics.hpp"
#include "tecno/problems.hpp"
#include "tecno/solver.hpp"

namespace tecno {

struct Resolution {
  int nx = 0;
  int ny = 0;
  auto operator<=>(const Resolution&) const = default;
};

/// "32x32, 64x64" -> {{32,32},{64,64}}. Throws ConfigError on malformed input.
std::vector<Resolution> parse_ladder(std::string_view text);

struct StudyConfig {
  std::string problem;
  ProblemParameters params;
  std::vector<Resolution> ladder;
  /// linf_bound is replaced by the problem's sup|u0| unless linf_override is set.
  SolverConfig solver;
  std::optional<double> linf_override;
  std::filesystem::path output = "out";
  bool emit_snapshots = false;

  /// Throws ConfigError: empty ladder, rungs not strictly increasing in
  /// both nx and ny, or no oracle at t_end.
  void validate() const;
};

/// Solver configuration with M resolved against the problem.
SolverConfig resolved_solver(const SolverConfig& solver, std::optional<double> linf_override,
                             const ProblemSpec& problem);

struct StudyResult {
  std::vector<Resolution> ladder;
  /// One per rung in ladder order.
  std::vector<RunResult> runs;
  /// Rows for the leading rungs that completed.
  std::vector<ConvergenceRow> rows;
  std::optional<std::string> failure;
};

/// Runs every rung (concurrently) and builds the convergence table. The
/// observed order between consecutive rungs uses the refinement ratio
/// sqrt(cells_fine / cells_coarse).
StudyResult run_study(const StudyConfig& cfg);

/// Convergence rows from per-rung errors.
std::vector<ConvergenceRow> convergence_table(const std::vector<Resolution>& ladder,
                                              const std::vector<double>& errors);

/// <dir>/convergence.csv and <dir>/<nx>x<ny>/ledger.csv (+ snapshots) per rung.
void emit_study_outputs(const StudyResult& result, const std::filesystem::path& directory,
                        bool snapshots);

}  // namespace tecno
