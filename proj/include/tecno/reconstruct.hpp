#pragma once

#include <span>
#include <vector>

#include "tecno/grid.hpp"

namespace tecno {

/// Left (minus) and right (plus) traces of the piecewise-linear ENO2
/// reconstruction at the interfaces normal to one axis.
struct EdgeValues {
  InterfaceField minus;
  InterfaceField plus;
};

/// Reconstruction jumps w^+ - w^- on both interface families.
struct ReconJump {
  InterfaceField x;
  InterfaceField y;

  const InterfaceField& along(Axis axis) const { return axis == Axis::X ? x : y; }
};

/// ENO2 undivided slope from the backward and forward differences: the one
/// smaller in magnitude, ties going to the backward difference.
inline double eno2_slope(double backward, double forward) {
  return (backward < 0 ? -backward : backward) <= (forward < 0 ? -forward : forward) ? backward
                                                                                       : forward;
}

/// Slopes of the interior cells of `row` (its first and last entries only
/// feed the stencils), so the result has row.size() - 2 entries.
std::vector<double> eno2_slopes(std::span<const double> row);

/// Reconstruction jumps at the interfaces of a padded row whose first and
/// last entries serve only as stencil points: entry k is the jump between
/// row[k+1] and row[k+2], giving row.size() - 3 values.
std::vector<double> eno2_row_jumps(std::span<const double> row);

EdgeValues eno2_edge_values(const GridFunction& w, Axis dir);
InterfaceField recon_jump(const EdgeValues& e);

/// Both axes at once. Agrees with eno2_edge_values + recon_jump up to rounding,
/// but is computed so that the sign of [[w]] is preserved exactly.
ReconJump reconstruct_jumps(const GridFunction& w);

struct SignReport {
  long violations = 0;
  double max_ratio = 0.0;   ///< max over interfaces with nonzero jump
  long interfaces = 0;
};

/// Sign property check on a row whose end entries are stencil-only.
SignReport check_sign_property(std::span<const double> row);

struct CubeReport {
  double lhs = 0.0;  ///< sum |[[w]]|^3
  double rhs = 0.0;  ///< 2 ||w||_inf sum <<w>> [[w]]
  bool holds() const { return lhs <= rhs; }
};

/// Cube inequality for the compactly supported row obtained by surrounding
/// `support` with zeros; every interface with a nonzero contribution is summed.
CubeReport check_cube_inequality(std::span<const double> support);

}  // namespace tecno
