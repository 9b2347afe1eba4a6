#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tecno/diagnostics.hpp"
#include "tecno/grid.hpp"
#include "tecno/solver.hpp"

namespace tecno {

inline constexpr const char* kLedgerHeader =
    "step,time,dt,total_mass,total_entropy,dissipation_increment,cube_x,cube_y,pair_x,pair_y";
inline constexpr const char* kConvergenceHeader = "nx,ny,l1_error,observed_order";
inline constexpr const char* kSnapshotHeader = "i,j,x,y,u";

/// Real number with 17 significant digits (round-trips any double).
std::string format_real(double v);

// Writers throw std::runtime_error when the file cannot be written.
void write_ledger_csv(const EntropyLedger& ledger, const std::filesystem::path& file);
void write_convergence_csv(const std::vector<ConvergenceRow>& rows, const std::filesystem::path& file);
void write_snapshot_csv(const GridFunction& u, const std::filesystem::path& file);

/// Reads a snapshot written by write_snapshot_csv back onto `grid`.
GridFunction read_snapshot_csv(const std::filesystem::path& file, const Grid2D& grid);

/// ledger.csv and, when requested, snap_<step>.csv for every snapshot.
void emit_run_outputs(const RunResult& result, const std::filesystem::path& directory,
                      bool snapshots);

}  // namespace tecno
