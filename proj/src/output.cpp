#include "tecno/output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tecno {

namespace {

std::ofstream open_for_writing(const std::filesystem::path& file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& file) {
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + file.string());
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_ledger_csv(const EntropyLedger& ledger, const std::filesystem::path& file) {
  std::ofstream out = open_for_writing(file);
  out << kLedgerHeader << '\n';
  for (const LedgerRow& r : ledger.rows) {
    out << r.step;
    for (double v : {r.time, r.dt, r.total_mass, r.total_entropy, r.dissipation_increment, r.cube_x,
                     r.cube_y, r.pair_x, r.pair_y}) {
      out << ',' << format_real(v);
    }
    out << '\n';
  }
  finish(out, file);
}

void write_convergence_csv(const std::vector<ConvergenceRow>& rows,
                           const std::filesystem::path& file) {
  std::ofstream out = open_for_writing(file);
  out << kConvergenceHeader << '\n';
  for (const ConvergenceRow& r : rows) {
    out << r.nx << ',' << r.ny << ',' << format_real(r.l1_error) << ',';
    if (r.observed_order) out << format_real(*r.observed_order);
    out << '\n';
  }
  finish(out, file);
}

void write_snapshot_csv(const GridFunction& u, const std::filesystem::path& file) {
  std::ofstream out = open_for_writing(file);
  const Grid2D& g = u.grid();
  out << kSnapshotHeader << '\n';
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      out << i << ',' << j << ',' << format_real(g.cell_x(i)) << ',' << format_real(g.cell_y(j))
          << ',' << format_real(u(i, j)) << '\n';
    }
  }
  finish(out, file);
}

GridFunction read_snapshot_csv(const std::filesystem::path& file, const Grid2D& grid) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  std::string line;
  if (!std::getline(in, line) || line != kSnapshotHeader) {
    throw std::runtime_error(file.string() + ": bad snapshot header");
  }
  GridFunction u(grid);
  std::size_t seen = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    int i = -1, j = -1;
    double x = 0, y = 0, v = 0;
    char c1, c2, c3, c4;
    if (!(row >> i >> c1 >> j >> c2 >> x >> c3 >> y >> c4 >> v) || i < 0 || j < 0 ||
        i >= grid.nx() || j >= grid.ny()) {
      throw std::runtime_error(file.string() + ": malformed row '" + line + "'");
    }
    u(i, j) = v;
    ++seen;
  }
  if (seen != grid.cell_count()) throw std::runtime_error(file.string() + ": wrong cell count");
  return u;
}

void emit_run_outputs(const RunResult& result, const std::filesystem::path& directory,
                      bool snapshots) {
  std::filesystem::create_directories(directory);
  write_ledger_csv(result.ledger(), directory / "ledger.csv");
  if (!snapshots) return;
  for (const Snapshot& s : result.snapshots) {
    write_snapshot_csv(s.u, directory / ("snap_" + std::to_string(s.step) + ".csv"));
  }
}

}  // namespace tecno
