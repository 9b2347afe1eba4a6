#include "tecno/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tecno/error.hpp"

namespace tecno {

Grid2D::Grid2D(int nx, int ny, double dx, double dy, double x0, double y0, Boundary boundary)
    : nx_(nx), ny_(ny), dx_(dx), dy_(dy), x0_(x0), y0_(y0), boundary_(boundary) {
  if (nx < 3 || ny < 3) {
    throw std::invalid_argument("Grid2D: need at least 3 cells per direction, got " +
                                std::to_string(nx) + "x" + std::to_string(ny));
  }
  if (!(dx > 0.0) || !(dy > 0.0) || !std::isfinite(dx) || !std::isfinite(dy)) {
    throw std::invalid_argument("Grid2D: cell widths must be positive and finite");
  }
  if (!std::isfinite(x0) || !std::isfinite(y0)) {
    throw std::invalid_argument("Grid2D: origin must be finite");
  }
}

Grid2D Grid2D::covering(double x0, double x1, double y0, double y1, int nx, int ny,
                        Boundary boundary) {
  if (nx <= 0 || ny <= 0) throw std::invalid_argument("Grid2D: cell counts must be positive");
  return Grid2D(nx, ny, (x1 - x0) / nx, (y1 - y0) / ny, x0, y0, boundary);
}

int resolve_index(int i, int n, Boundary boundary) {
  if (i >= 0 && i < n) return i;
  if (boundary == Boundary::Periodic) {
    const int r = i % n;
    return r < 0 ? r + n : r;
  }
  return std::clamp(i, 0, n - 1);
}

GridFunction::GridFunction(const Grid2D& grid, double time)
    : grid_(grid), values_(grid.cell_count(), 0.0), time_(time) {}

GridFunction::GridFunction(const Grid2D& grid, std::vector<double> values, double time)
    : grid_(grid), values_(std::move(values)), time_(time) {
  if (values_.size() != grid_.cell_count()) {
    throw std::invalid_argument("GridFunction: value count does not match grid");
  }
}

double GridFunction::ghost(int i, int j) const {
  return (*this)(resolve_index(i, grid_.nx(), grid_.boundary()),
                 resolve_index(j, grid_.ny(), grid_.boundary()));
}

void GridFunction::require_finite(const char* context) const {
  for (std::size_t n = 0; n < values_.size(); ++n) {
    if (!std::isfinite(values_[n])) {
      const int i = static_cast<int>(n % grid_.nx());
      const int j = static_cast<int>(n / grid_.nx());
      throw NumericalError(std::string(context) + ": non-finite value at cell (" +
                           std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
}

InterfaceField::InterfaceField(const Grid2D& grid, Axis axis, double fill)
    : axis_(axis),
      ni_(axis == Axis::X ? grid.nx() + 1 : grid.nx()),
      nj_(axis == Axis::X ? grid.ny() : grid.ny() + 1),
      data_(static_cast<std::size_t>(ni_) * nj_, fill) {}

PaddedField::PaddedField(const GridFunction& w, int ghost) : g_(ghost) {
  const Grid2D& grid = w.grid();
  stride_ = grid.nx() + 2 * g_;
  data_.resize(static_cast<std::size_t>(stride_) * (grid.ny() + 2 * g_));
  for (int j = -g_; j < grid.ny() + g_; ++j) {
    for (int i = -g_; i < grid.nx() + g_; ++i) {
      data_[static_cast<std::size_t>(j + g_) * stride_ + (i + g_)] = w.ghost(i, j);
    }
  }
}

PaddedField apply_boundary(const GridFunction& w, int n_ghost) {
  const Grid2D& grid = w.grid();
  if (n_ghost < 1 || n_ghost > std::min(grid.nx(), grid.ny())) {
    throw std::invalid_argument("apply_boundary: ghost width " + std::to_string(n_ghost) +
                                " outside [1, min(nx, ny)]");
  }
  return PaddedField(w, n_ghost);
}

namespace {

template <class Op>
InterfaceField interface_op(const GridFunction& w, Axis dir, Op op, const char* name) {
  w.require_finite(name);
  const Grid2D& grid = w.grid();
  InterfaceField out(grid, dir);
  const int n = grid.extent(dir);
  for (int line = 0; line < grid.lines(dir); ++line) {
    for (int k = 0; k <= n; ++k) {
      const double left = dir == Axis::X ? w.ghost(k - 1, line) : w.ghost(line, k - 1);
      const double right = dir == Axis::X ? w.ghost(k, line) : w.ghost(line, k);
      out.along(line, k) = op(left, right);
    }
  }
  return out;
}

}  // namespace

InterfaceField interface_jump(const GridFunction& w, Axis dir) {
  return interface_op(w, dir, [](double l, double r) { return r - l; }, "interface_jump");
}

InterfaceField interface_average(const GridFunction& w, Axis dir) {
  return interface_op(w, dir, [](double l, double r) { return 0.5 * (l + r); },
                      "interface_average");
}

double cell_average(const Grid2D& grid, int i, int j, const PointFunction& f) {
  // Gauss-Legendre nodes at +-1/sqrt(3) on the reference interval.
  static const double node = 0.5 / std::sqrt(3.0);
  const double xc = grid.cell_x(i);
  const double yc = grid.cell_y(j);
  const double hx = node * grid.dx();
  const double hy = node * grid.dy();
  const double sum = (f(xc - hx, yc - hy) + f(xc + hx, yc - hy)) +
                     (f(xc - hx, yc + hy) + f(xc + hx, yc + hy));
  return 0.25 * sum;
}

GridFunction project_initial_data(const Grid2D& grid, const PointFunction& u0) {
  GridFunction out(grid);
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = 0; i < grid.nx(); ++i) out(i, j) = cell_average(grid, i, j, u0);
  }
  out.require_finite("project_initial_data");
  return out;
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace tecno
