#include "tecno/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tecno/error.hpp"

namespace tecno {

std::vector<double> eno2_slopes(std::span<const double> row) {
  if (row.size() < 3) throw std::invalid_argument("eno2_slopes: row needs at least 3 entries");
  std::vector<double> slopes(row.size() - 2);
  for (std::size_t i = 1; i + 1 < row.size(); ++i) {
    slopes[i - 1] = eno2_slope(row[i] - row[i - 1], row[i + 1] - row[i]);
  }
  return slopes;
}

std::vector<double> eno2_row_jumps(std::span<const double> row) {
  if (row.size() < 4) return {};
  const std::vector<double> s = eno2_slopes(row);
  std::vector<double> jumps(s.size() - 1);
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    jumps[k] = (row[k + 2] - row[k + 1]) - 0.5 * (s[k] + s[k + 1]);
  }
  return jumps;
}

EdgeValues eno2_edge_values(const GridFunction& w, Axis dir) {
  w.require_finite("eno2_edge_values");
  const Grid2D& grid = w.grid();
  const PaddedField p = apply_boundary(w, 2);
  EdgeValues e{InterfaceField(grid, dir), InterfaceField(grid, dir)};
  const int n = grid.extent(dir);
  std::vector<double> line(n + 4);
  std::vector<double> slope(n + 2);
  for (int l = 0; l < grid.lines(dir); ++l) {
    for (int c = -2; c < n + 2; ++c) line[c + 2] = dir == Axis::X ? p(c, l) : p(l, c);
    // slope[c + 1] belongs to cell c in [-1, n].
    for (int c = -1; c <= n; ++c) {
      slope[c + 1] = eno2_slope(line[c + 2] - line[c + 1], line[c + 3] - line[c + 2]);
    }
    for (int k = 0; k <= n; ++k) {
      e.minus.along(l, k) = line[k + 1] + 0.5 * slope[k];
      e.plus.along(l, k) = line[k + 2] - 0.5 * slope[k + 1];
    }
  }
  for (const InterfaceField* f : {&e.minus, &e.plus}) {
    for (double v : f->values()) {
      if (!std::isfinite(v)) throw NumericalError("eno2_edge_values: non-finite trace");
    }
  }
  return e;
}

InterfaceField recon_jump(const EdgeValues& e) {
  InterfaceField out = e.plus;
  for (int j = 0; j < out.nj(); ++j) {
    for (int i = 0; i < out.ni(); ++i) out(i, j) = e.plus(i, j) - e.minus(i, j);
  }
  return out;
}

namespace {

// Same reconstruction as eno2_edge_values, written as
// [[w]] - (s_i + s_{i+1}) / 2. Both slopes are bounded by |[[w]]| and share
// its difference, so the result keeps the sign of [[w]] in floating point;
// w^+ - w^- can lose it to cancellation when both slopes equal [[w]].
InterfaceField jumps_along(const PaddedField& p, const Grid2D& grid, Axis dir) {
  InterfaceField out(grid, dir);
  const int n = grid.extent(dir);
  std::vector<double> diff(n + 3);
  for (int l = 0; l < grid.lines(dir); ++l) {
    // diff[c + 2] = w_c - w_{c-1} for c in [-1, n+1].
    for (int c = -1; c <= n + 1; ++c) {
      diff[c + 1] = dir == Axis::X ? p(c, l) - p(c - 1, l) : p(l, c) - p(l, c - 1);
    }
    double left = eno2_slope(diff[0], diff[1]);  // cell -1
    for (int k = 0; k <= n; ++k) {
      const double right = eno2_slope(diff[k + 1], diff[k + 2]);  // cell k
      out.along(l, k) = diff[k + 1] - 0.5 * (left + right);
      left = right;
    }
  }
  return out;
}

}  // namespace

ReconJump reconstruct_jumps(const GridFunction& w) {
  w.require_finite("reconstruct_jumps");
  const PaddedField p = apply_boundary(w, 2);
  return ReconJump{jumps_along(p, w.grid(), Axis::X), jumps_along(p, w.grid(), Axis::Y)};
}

SignReport check_sign_property(std::span<const double> row) {
  SignReport report;
  const std::vector<double> recon = eno2_row_jumps(row);
  for (std::size_t k = 0; k < recon.size(); ++k) {
    const double jump = row[k + 2] - row[k + 1];
    ++report.interfaces;
    if (recon[k] * jump < 0.0) ++report.violations;
    if (jump != 0.0) report.max_ratio = std::max(report.max_ratio, recon[k] / jump);
  }
  return report;
}

CubeReport check_cube_inequality(std::span<const double> support) {
  // Two zeros on each side make every slope outside the padded range vanish,
  // so the interfaces of the padded row cover all nonzero contributions.
  std::vector<double> row(support.size() + 4, 0.0);
  std::copy(support.begin(), support.end(), row.begin() + 2);
  const std::vector<double> recon = eno2_row_jumps(row);
  double sup = 0.0;
  for (double v : support) sup = std::max(sup, std::abs(v));
  CubeReport r;
  double pair = 0.0;
  for (std::size_t k = 0; k < recon.size(); ++k) {
    const double jump = row[k + 2] - row[k + 1];
    r.lhs += std::abs(jump) * jump * jump;
    pair += recon[k] * jump;
  }
  r.rhs = 2.0 * sup * pair;
  return r;
}

}  // namespace tecno
