#include "tecno/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tecno/error.hpp"

namespace tecno {

namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"grid", {"nx", "ny"}},
      {"problem", {"name", "flux", "a", "b", "u_left", "u_right"}},
      {"flux", {"d_low", "d_high"}},
      {"solver",
       {"cfl", "t_end", "linf_bound", "snapshot_interval", "entropy_rate_check", "kruzkov_k",
        "kruzkov_delta"}},
      {"study", {"ladder", "output", "emit_snapshots"}},
  };
  return keys;
}

double to_real(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError(key + ": not a number: '" + text + "'");
  }
  if (text.find_first_not_of(" \t", used) != std::string::npos) {
    throw ConfigError(key + ": trailing characters in '" + text + "'");
  }
  return v;
}

int to_int(const std::string& key, const std::string& text) {
  const double v = to_real(key, text);
  if (v != static_cast<int>(v)) throw ConfigError(key + ": expected an integer, got '" + text + "'");
  return static_cast<int>(v);
}

bool to_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError(key + ": expected true/false, got '" + text + "'");
}

}  // namespace

StudyConfig ExperimentConfig::study() const {
  StudyConfig s;
  s.problem = problem;
  s.params = params;
  s.ladder = ladder.empty() ? std::vector<Resolution>{{nx, ny}} : ladder;
  s.solver = solver;
  s.linf_override = linf_override;
  s.output = output;
  s.emit_snapshots = emit_snapshots;
  return s;
}

SolverConfig ExperimentConfig::run_solver() const {
  SolverConfig s = resolved_solver(solver, linf_override, problem_spec());
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return s;
}

ExperimentConfig parse_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config syntax: ") + e.what());
  }

  ExperimentConfig cfg;
  std::vector<double> kruzkov_k;
  double kruzkov_delta = kDefaultKruzkovDelta;
  bool delta_given = false;

  for (const auto& [section, body] : tree) {
    const auto known = known_keys().find(section);
    if (known == known_keys().end()) {
      throw ConfigError(!body.data().empty() ? "key '" + section + "' outside any section"
                                     : "unknown section [" + section + "]");
    }
    for (const auto& [key, node] : body) {
      if (!known->second.contains(key)) {
        throw ConfigError("unknown key '" + key + "' in [" + section + "]");
      }
      const std::string name = section + "." + key;
      const std::string value = node.get_value<std::string>();
      if (section == "grid") {
        (key == "nx" ? cfg.nx : cfg.ny) = to_int(name, value);
      } else if (section == "problem") {
        if (key == "name") cfg.problem = value;
        else if (key == "flux") cfg.params.flux = value;
        else if (key == "a") cfg.params.a = to_real(name, value);
        else if (key == "b") cfg.params.b = to_real(name, value);
        else if (key == "u_left") cfg.params.u_left = to_real(name, value);
        else cfg.params.u_right = to_real(name, value);
      } else if (section == "flux") {
        (key == "d_low" ? cfg.solver.bounds.d_low : cfg.solver.bounds.d_high) = to_real(name, value);
      } else if (section == "solver") {
        if (key == "cfl") cfg.solver.cfl = to_real(name, value);
        else if (key == "t_end") cfg.solver.t_end = to_real(name, value);
        else if (key == "linf_bound") cfg.linf_override = to_real(name, value);
        else if (key == "snapshot_interval") cfg.solver.snapshot_interval = to_real(name, value);
        else if (key == "entropy_rate_check")
          cfg.solver.diagnostics.entropy_rate_check = to_bool(name, value);
        else if (key == "kruzkov_delta") {
          kruzkov_delta = to_real(name, value);
          delta_given = true;
        } else {
          std::stringstream ss(value);
          std::string item;
          while (std::getline(ss, item, ',')) kruzkov_k.push_back(to_real(name, item));
        }
      } else {
        if (key == "ladder") cfg.ladder = parse_ladder(value);
        else if (key == "output") cfg.output = value;
        else cfg.emit_snapshots = to_bool(name, value);
      }
    }
  }
  if (delta_given && kruzkov_k.empty()) {
    throw ConfigError("solver.kruzkov_delta given without solver.kruzkov_k");
  }
  for (double k : kruzkov_k) cfg.solver.diagnostics.kruzkov.push_back({k, kruzkov_delta});
  if (cfg.nx < 3 || cfg.ny < 3) throw ConfigError("grid.nx and grid.ny must be at least 3");
  cfg.problem_spec();  // unknown problem or parameter -> ConfigError now
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open config " + file.string());
  return parse_config(in);
}

}  // namespace tecno
