#include "tecno/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tecno/error.hpp"

namespace tecno {

void SolverConfig::validate() const {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("cfl must lie in (0, 1]");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw std::invalid_argument("t_end must be finite and non-negative");
  }
  if (!(linf_bound > 0.0) || !std::isfinite(linf_bound)) {
    throw std::invalid_argument("linf_bound must be positive");
  }
  if (!std::isfinite(snapshot_interval)) throw std::invalid_argument("snapshot_interval must be finite");
  bounds.validate();
  for (const auto& p : diagnostics.kruzkov) {
    if (!(p.delta > 0.0)) throw std::invalid_argument("kruzkov delta must be positive");
  }
}

RhsEvaluation evaluate_rhs(const GridFunction& u, const FluxSpec& spec,
                           const DiffusionBounds& bounds) {
  ReconJump jumps = reconstruct_jumps(u);
  NumericalFluxField fluxes = assemble_tecno_flux(u, jumps, spec, bounds);
  const Grid2D& grid = u.grid();
  GridFunction rate(grid, u.time());
  const double rdx = 1.0 / grid.dx(), rdy = 1.0 / grid.dy();
  const InterfaceField& fx = fluxes.x.total;
  const InterfaceField& fy = fluxes.y.total;
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = 0; i < grid.nx(); ++i) {
      rate(i, j) = -(fx(i + 1, j) - fx(i, j)) * rdx - (fy(i, j + 1) - fy(i, j)) * rdy;
    }
  }
  rate.require_finite("semidiscrete_rhs");
  return RhsEvaluation{std::move(rate), std::move(jumps), std::move(fluxes)};
}

GridFunction semidiscrete_rhs(const GridFunction& u, const FluxSpec& spec,
                              const DiffusionBounds& bounds) {
  return evaluate_rhs(u, spec, bounds).rate;
}

double stable_timestep(const GridFunction& u, const FluxSpec& spec, const DiffusionBounds& bounds,
                       double cfl) {
  u.require_finite("stable_timestep");
  double ax = 0.0, ay = 0.0;
  for (double v : u.values()) {
    ax = std::max(ax, std::abs(spec.x.derivative(v)));
    ay = std::max(ay, std::abs(spec.y.derivative(v)));
  }
  const Grid2D& g = u.grid();
  const double rate = ax / g.dx() + ay / g.dy() + 2.0 * bounds.d_high * (1.0 / g.dx() + 1.0 / g.dy());
  const double dt = cfl / rate;
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw NumericalError("stable_timestep: invalid time step " + std::to_string(dt));
  }
  return dt;
}

namespace {

double max_abs(const GridFunction& u) {
  double m = 0.0;
  for (double v : u.values()) m = std::max(m, std::abs(v));
  return m;
}

void monitor_linf(EntropyLedger& ledger, const GridFunction& u, double bound) {
  const double m = max_abs(u);
  ledger.sup_linf = std::max(ledger.sup_linf, m);
  if (m > bound * (1.0 + 1e-12)) ++ledger.linf_breaches;
}

// Adds the weighted contribution of one RHS evaluation to the step row.
void observe_stage(EntropyLedger& ledger, LedgerRow& row, const GridFunction& u,
                   const RhsEvaluation& eval, double weight, const SolverConfig& config,
                   const EntropyPair* square) {
  row.dissipation_increment += dissipation_increment(u, eval.jumps, eval.fluxes, weight);
  const WeakBvSums s = weak_bv_sums(u, eval.jumps);
  row.cube_x += s.cube_x * weight;
  row.cube_y += s.cube_y * weight;
  row.pair_x += s.pair_x * weight;
  row.pair_y += s.pair_y * weight;

  ++ledger.rhs_evaluations;
  if (square != nullptr && config.diagnostics.entropy_rate_check) {
    const EntropyRateIdentity id = entropy_rate_identity(*square, u, eval.rate, eval.jumps, eval.fluxes);
    ledger.max_rate_defect = std::max(ledger.max_rate_defect, std::abs(id.lhs - id.rhs));
    ledger.max_dissipation_rhs = ledger.rhs_evaluations == 1
                                     ? id.rhs
                                     : std::max(ledger.max_dissipation_rhs, id.rhs);
  }
  for (auto& tracker : ledger.residuals) {
    const EntropyResidual r = entropy_residual(tracker.pair, tracker.constants, u, eval.jumps, eval.fluxes);
    tracker.residual_total += r.residual_measure * weight;
    tracker.bound_total += r.bound_rhs * weight;
  }
}

}  // namespace

SolverState initial_state(const SolverConfig& config, const InitialValueProblem& problem) {
  config.validate();
  SolverState state{project_initial_data(problem.grid, problem.u0), 0.0, 0, {}};
  LedgerRow row;
  row.total_mass = total_mass(state.u);
  row.total_entropy = total_square_entropy(state.u);
  state.ledger.rows.push_back(row);
  monitor_linf(state.ledger, state.u, config.linf_bound);
  for (const KruzkovProbe& probe : config.diagnostics.kruzkov) {
    ResidualTracker tracker{probe, smoothed_kruzkov_pair(problem.flux, probe.k, probe.delta), {}};
    tracker.constants =
        residual_constants(tracker.pair, problem.flux, config.linf_bound, config.bounds.d_high);
    state.ledger.residuals.push_back(std::move(tracker));
  }
  return state;
}

void ssprk2_step(SolverState& state, double dt, const SolverConfig& config, const FluxSpec& spec) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw NumericalError("ssprk2_step: invalid dt");
  const EntropyPair square = square_entropy_pair(spec);
  LedgerRow row;
  row.step = state.step_count + 1;
  row.dt = dt;

  const GridFunction& u = state.u;
  const RhsEvaluation first = evaluate_rhs(u, spec, config.bounds);
  observe_stage(state.ledger, row, u, first, 0.5 * dt, config, &square);

  GridFunction stage(u.grid(), u.time() + dt);
  {
    auto s = stage.values();
    auto a = u.values();
    auto r = first.rate.values();
    for (std::size_t n = 0; n < s.size(); ++n) s[n] = a[n] + dt * r[n];
  }
  stage.require_finite("ssprk2_step (stage 1)");

  const RhsEvaluation second = evaluate_rhs(stage, spec, config.bounds);
  observe_stage(state.ledger, row, stage, second, 0.5 * dt, config, &square);

  GridFunction next(u.grid(), state.t + dt);
  {
    auto out = next.values();
    auto a = u.values();
    auto s = stage.values();
    auto r = second.rate.values();
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = 0.5 * a[n] + 0.5 * (s[n] + dt * r[n]);
  }
  next.require_finite("ssprk2_step");

  state.u = std::move(next);
  state.t += dt;
  state.step_count += 1;
  row.time = state.t;
  row.total_mass = total_mass(state.u);
  row.total_entropy = total_square_entropy(state.u);
  state.ledger.rows.push_back(row);
  monitor_linf(state.ledger, state.u, config.linf_bound);
}

RunResult run(const SolverConfig& config, const InitialValueProblem& problem) {
  RunResult result{initial_state(config, problem), {}, std::nullopt};
  SolverState& state = result.state;
  const bool snapshots = config.snapshot_interval > 0.0;
  long next_snapshot = 1;
  if (snapshots) result.snapshots.push_back({0, state.u});

  try {
    while (state.t < config.t_end) {
      double target = config.t_end;
      if (snapshots) target = std::min(target, next_snapshot * config.snapshot_interval);
      double dt = stable_timestep(state.u, problem.flux, config.bounds, config.cfl);
      const bool lands = state.t + dt >= target;
      if (lands) dt = target - state.t;
      ssprk2_step(state, dt, config, problem.flux);
      if (lands) {
        state.t = target;
        state.u.set_time(target);
        state.ledger.rows.back().time = target;
      }
      if (snapshots && lands && target < config.t_end) {
        result.snapshots.push_back({state.step_count, state.u});
        ++next_snapshot;
      }
    }
  } catch (const NumericalError& e) {
    result.failure = e.what();
  }
  if (snapshots && result.snapshots.back().step != state.step_count) {
    result.snapshots.push_back({state.step_count, state.u});
  }
  return result;
}

}  // namespace tecno
