#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tecno/diagnostics.hpp"
#include "tecno/entropy.hpp"
#include "tecno/flux.hpp"
#include "tecno/grid.hpp"
#include "tecno/reconstruct.hpp"

namespace tecno {

struct DiagnosticsOptions {
  /// Check the semi-discrete square-entropy balance at every RHS evaluation.
  bool entropy_rate_check = true;
  /// Smoothed Kruzkov entropies whose residual measure is accumulated.
  std::vector<KruzkovProbe> kruzkov;
};

struct SolverConfig {
  double cfl = 0.4;
  double t_end = 1.0;
  DiffusionBounds bounds;
  /// Assumed a-priori bound M on |u|; monitored, not enforced.
  double linf_bound = 1.0;
  /// Snapshot spacing in simulation time; <= 0 disables snapshots.
  double snapshot_interval = 0.0;
  DiagnosticsOptions diagnostics;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

struct InitialValueProblem {
  Grid2D grid;
  FluxSpec flux;
  PointFunction u0;
};

struct SolverState {
  GridFunction u;
  double t = 0.0;
  long step_count = 0;
  EntropyLedger ledger;
};

/// Everything computed during one right-hand-side evaluation.
struct RhsEvaluation {
  GridFunction rate;
  ReconJump jumps;
  NumericalFluxField fluxes;
};

RhsEvaluation evaluate_rhs(const GridFunction& u, const FluxSpec& spec,
                           const DiffusionBounds& bounds);

/// rate_ij = -(F^x_{i+1/2,j} - F^x_{i-1/2,j})/dx - (F^y_{i,j+1/2} - F^y_{i,j-1/2})/dy.
GridFunction semidiscrete_rhs(const GridFunction& u, const FluxSpec& spec,
                              const DiffusionBounds& bounds);

/// cfl / (max|f_x'|/dx + max|f_y'|/dy + 2 d_high (1/dx + 1/dy)).
double stable_timestep(const GridFunction& u, const FluxSpec& spec, const DiffusionBounds& bounds,
                       double cfl);

/// Projects the initial data and prepares the ledger (initial row, residual
/// trackers for the configured Kruzkov probes).
SolverState initial_state(const SolverConfig& config, const InitialValueProblem& problem);

/// One SSP-RK2 (Heun) step of size dt, updating u, t, the step counter and
/// the ledger. Throws NumericalError on non-finite data.
void ssprk2_step(SolverState& state, double dt, const SolverConfig& config, const FluxSpec& spec);

struct Snapshot {
  long step = 0;
  GridFunction u;
};

struct RunResult {
  SolverState state;
  std::vector<Snapshot> snapshots;
  /// Set when the evolution stopped early; the state and ledger hold
  /// everything up to the last accepted step.
  std::optional<std::string> failure;

  const EntropyLedger& ledger() const { return state.ledger; }
};

/// Evolves the projected initial data to config.t_end.
RunResult run(const SolverConfig& config, const InitialValueProblem& problem);

}  // namespace tecno
