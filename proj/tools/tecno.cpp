// Command-line driver: run, study, verify, list-problems.
#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "tecno/config.hpp"
#include "tecno/error.hpp"
#include "tecno/output.hpp"
#include "tecno/problems.hpp"
#include "tecno/study.hpp"
#include "tecno/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kConfigError = 2;

struct Overrides {
  std::string config;
  std::string problem;
  std::optional<int> nx, ny;
  std::optional<double> cfl, tend;
  std::string out;
};

void add_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "INI config file")->check(CLI::ExistingFile);
  cmd->add_option("--problem", o.problem, "registered problem name");
  cmd->add_option("--nx", o.nx, "cells in x");
  cmd->add_option("--ny", o.ny, "cells in y");
  cmd->add_option("--cfl", o.cfl, "CFL number in (0,1]");
  cmd->add_option("--tend", o.tend, "final time");
  cmd->add_option("--out", o.out, "output directory");
}

tecno::ExperimentConfig build_config(const Overrides& o) {
  tecno::ExperimentConfig cfg;
  if (!o.config.empty()) cfg = tecno::load_config(o.config);
  if (!o.problem.empty()) {
    cfg.problem = o.problem;
    if (o.config.empty()) cfg.params = {};
  }
  if (o.nx) cfg.nx = *o.nx;
  if (o.ny) cfg.ny = *o.ny;
  if (o.nx || o.ny) cfg.ladder.clear();
  if (o.cfl) cfg.solver.cfl = *o.cfl;
  if (o.tend) cfg.solver.t_end = *o.tend;
  if (!o.out.empty()) cfg.output = o.out;
  if (cfg.nx < 3 || cfg.ny < 3) throw tecno::ConfigError("nx and ny must be at least 3");
  cfg.problem_spec();
  return cfg;
}

int cmd_run(const Overrides& o) {
  const tecno::ExperimentConfig cfg = build_config(o);
  const tecno::ProblemSpec problem = cfg.problem_spec();
  const tecno::SolverConfig solver = cfg.run_solver();
  const tecno::RunResult r = tecno::run(solver, problem.initial_value_problem(cfg.nx, cfg.ny));
  tecno::emit_run_outputs(r, cfg.output, cfg.emit_snapshots || solver.snapshot_interval > 0.0);

  const tecno::EntropyLedger& l = r.ledger();
  std::cout << problem.name << " " << cfg.nx << "x" << cfg.ny << ": t = " << r.state.t << ", "
            << r.state.step_count << " steps\n"
            << "  cumulative dissipation " << l.cumulative_dissipation() << "\n"
            << "  sup|u| " << l.sup_linf << " (M = " << solver.linf_bound << ", "
            << l.linf_breaches << " breaches)\n";
  if (solver.diagnostics.entropy_rate_check) {
    std::cout << "  entropy identity max defect " << l.max_rate_defect << "\n";
  }
  for (const auto& t : l.residuals) {
    std::cout << "  kruzkov k=" << t.probe.k << ": residual " << t.residual_total << " <= bound "
              << t.bound_total << (t.holds() ? "" : "  VIOLATED") << "\n";
  }
  if (problem.has_oracle_at(r.state.t)) {
    std::cout << "  l1 error " << tecno::l1_error(r.state.u, problem.exact_at(r.state.t)) << "\n";
  }
  std::cout << "  outputs in " << cfg.output.string() << "\n";
  if (r.failure) {
    std::cerr << "run failed: " << *r.failure << "\n";
    return kFailure;
  }
  return kOk;
}

int cmd_study(const Overrides& o) {
  const tecno::ExperimentConfig cfg = build_config(o);
  const tecno::StudyConfig study = cfg.study();
  const tecno::StudyResult r = tecno::run_study(study);
  tecno::emit_study_outputs(r, study.output, study.emit_snapshots);
  std::cout << "nx,ny,l1_error,observed_order\n";
  for (const auto& row : r.rows) {
    std::cout << row.nx << "," << row.ny << "," << tecno::format_real(row.l1_error) << ",";
    if (row.observed_order) std::cout << *row.observed_order;
    std::cout << "\n";
  }
  if (r.failure) {
    std::cerr << "study aborted: " << *r.failure << "\n";
    return kFailure;
  }
  return kOk;
}

int cmd_verify(std::uint64_t seed) {
  bool ok = true;
  for (const auto& p : tecno::run_property_suites(seed)) {
    std::cout << (p.passed ? "PASS " : "FAIL ") << p.name << ": " << p.detail << "\n";
    ok = ok && p.passed;
  }
  return ok ? kOk : kFailure;
}

int cmd_list() {
  for (const auto& p : tecno::registry()) std::cout << p.name << "\n  " << p.description << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy-stable TECNO solver for 2D scalar conservation laws"};
  app.require_subcommand(1);

  Overrides run_opts, study_opts;
  std::uint64_t seed = 20240611;
  auto* run = app.add_subcommand("run", "evolve one problem and write ledger/snapshots");
  add_overrides(run, run_opts);
  auto* study = app.add_subcommand("study", "refinement study against the exact solution");
  add_overrides(study, study_opts);
  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--seed", seed, "RNG seed for randomized properties");
  auto* list = app.add_subcommand("list-problems", "print the problem registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (run->parsed()) return cmd_run(run_opts);
    if (study->parsed()) return cmd_study(study_opts);
    if (verify->parsed()) return cmd_verify(seed);
    if (list->parsed()) return cmd_list();
  } catch (const tecno::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
