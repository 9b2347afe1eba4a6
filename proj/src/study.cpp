#include "tecno/study.hpp"

#include <cmath>
#include <future>
#include <regex>
#include <sstream>

#include "tecno/error.hpp"
#include "tecno/output.hpp"

namespace tecno {

std::vector<Resolution> parse_ladder(std::string_view text) {
  static const std::regex rung(R"(\s*(\d+)\s*x\s*(\d+)\s*)");
  std::vector<Resolution> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::smatch m;
    if (!std::regex_match(item, m, rung)) {
      throw ConfigError("bad ladder entry '" + item + "' (expected NXxNY)");
    }
    out.push_back({std::stoi(m[1]), std::stoi(m[2])});
  }
  if (out.empty()) throw ConfigError("empty ladder");
  return out;
}

void StudyConfig::validate() const {
  if (ladder.empty()) throw ConfigError("study ladder has no rungs");
  for (std::size_t r = 1; r < ladder.size(); ++r) {
    if (ladder[r].nx <= ladder[r - 1].nx || ladder[r].ny <= ladder[r - 1].ny) {
      throw ConfigError("study ladder must be strictly increasing in nx and ny");
    }
  }
  const ProblemSpec p = make_problem(problem, params);
  if (!p.has_oracle_at(solver.t_end)) {
    throw ConfigError("problem '" + problem + "' has no exact solution at t_end");
  }
  try {
    resolved_solver(solver, linf_override, p).validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

SolverConfig resolved_solver(const SolverConfig& solver, std::optional<double> linf_override,
                             const ProblemSpec& problem) {
  SolverConfig s = solver;
  s.linf_bound = linf_override.value_or(problem.linf_bound);
  return s;
}

std::vector<ConvergenceRow> convergence_table(const std::vector<Resolution>& ladder,
                                              const std::vector<double>& errors) {
  std::vector<ConvergenceRow> rows;
  for (std::size_t r = 0; r < errors.size() && r < ladder.size(); ++r) {
    ConvergenceRow row{ladder[r].nx, ladder[r].ny, errors[r], std::nullopt};
    if (r > 0) {
      const double cells = static_cast<double>(ladder[r].nx) * ladder[r].ny;
      const double coarse = static_cast<double>(ladder[r - 1].nx) * ladder[r - 1].ny;
      row.observed_order = observed_order(errors[r - 1], errors[r], std::sqrt(cells / coarse));
    }
    rows.push_back(row);
  }
  return rows;
}

StudyResult run_study(const StudyConfig& cfg) {
  cfg.validate();
  const ProblemSpec problem = make_problem(cfg.problem, cfg.params);
  const SolverConfig solver = resolved_solver(cfg.solver, cfg.linf_override, problem);

  std::vector<std::future<RunResult>> pending;
  for (const Resolution& r : cfg.ladder) {
    pending.push_back(std::async(std::launch::async, [&problem, &solver, r] {
      return run(solver, problem.initial_value_problem(r.nx, r.ny));
    }));
  }

  StudyResult result;
  result.ladder = cfg.ladder;
  for (auto& f : pending) result.runs.push_back(f.get());

  const PointFunction exact = problem.exact_at(solver.t_end);
  std::vector<double> errors;
  for (std::size_t r = 0; r < result.runs.size(); ++r) {
    const RunResult& run_r = result.runs[r];
    if (run_r.failure) {
      std::ostringstream msg;
      msg << "rung " << cfg.ladder[r].nx << "x" << cfg.ladder[r].ny << " failed at t = "
          << run_r.state.t << ": " << *run_r.failure;
      result.failure = msg.str();
      break;
    }
    errors.push_back(l1_error(run_r.state.u, exact));
  }
  result.rows = convergence_table(cfg.ladder, errors);
  return result;
}

void emit_study_outputs(const StudyResult& result, const std::filesystem::path& directory,
                        bool snapshots) {
  for (std::size_t r = 0; r < result.runs.size(); ++r) {
    const Resolution& res = result.ladder[r];
    emit_run_outputs(result.runs[r],
                     directory / (std::to_string(res.nx) + "x" + std::to_string(res.ny)), snapshots);
  }
  write_convergence_csv(result.rows, directory / "convergence.csv");
}

}  // namespace tecno
