#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace tecno {

enum class Axis { X, Y };
enum class Boundary { Periodic, Outflow };

/// Uniform Cartesian mesh. Cell (i,j) covers
/// [x0 + i*dx, x0 + (i+1)*dx) x [y0 + j*dy, y0 + (j+1)*dy).
class Grid2D {
 public:
  Grid2D(int nx, int ny, double dx, double dy, double x0, double y0, Boundary boundary);

  /// Grid covering [x0, x1] x [y0, y1] with nx x ny cells.
  static Grid2D covering(double x0, double x1, double y0, double y1, int nx, int ny,
                         Boundary boundary);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }
  double x0() const { return x0_; }
  double y0() const { return y0_; }
  Boundary boundary() const { return boundary_; }

  double cell_x(int i) const { return x0_ + (i + 0.5) * dx_; }
  double cell_y(int j) const { return y0_ + (j + 0.5) * dy_; }
  double face_x(int i) const { return x0_ + (i + 1) * dx_; }
  double face_y(int j) const { return y0_ + (j + 1) * dy_; }

  std::size_t cell_count() const { return static_cast<std::size_t>(nx_) * ny_; }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx_ + i; }

  /// Cells along `dir` (nx for X) and the number of such lines (ny for X).
  int extent(Axis dir) const { return dir == Axis::X ? nx_ : ny_; }
  int lines(Axis dir) const { return dir == Axis::X ? ny_ : nx_; }

  /// Face length of an interface normal to `dir` (dy for X-interfaces).
  double face_length(Axis dir) const { return dir == Axis::X ? dy_ : dx_; }
  double spacing(Axis dir) const { return dir == Axis::X ? dx_ : dy_; }

  /// First interface index that is owned for global sums: periodic domains
  /// count the wrap interface once (indices 1..n), outflow domains count
  /// both boundary interfaces (indices 0..n).
  int first_owned_interface() const { return boundary_ == Boundary::Periodic ? 1 : 0; }

  bool operator==(const Grid2D&) const = default;

 private:
  int nx_, ny_;
  double dx_, dy_, x0_, y0_;
  Boundary boundary_;
};

/// Cell averages u_{i,j} at a time instant, stored row-major (x fastest).
class GridFunction {
 public:
  explicit GridFunction(const Grid2D& grid, double time = 0.0);
  GridFunction(const Grid2D& grid, std::vector<double> values, double time = 0.0);

  const Grid2D& grid() const { return grid_; }
  double time() const { return time_; }
  void set_time(double t) { time_ = t; }

  double operator()(int i, int j) const { return values_[grid_.index(i, j)]; }
  double& operator()(int i, int j) { return values_[grid_.index(i, j)]; }

  /// Value with ghost indices (-g..n+g-1) resolved through the boundary policy.
  double ghost(int i, int j) const;

  std::span<const double> values() const& { return values_; }
  std::span<double> values() & { return values_; }
  // A span into a temporary would dangle.
  void values() && = delete;

  /// Throws NumericalError naming `context` if any entry is NaN or infinite.
  void require_finite(const char* context) const;

 private:
  Grid2D grid_;
  std::vector<double> values_;
  double time_;
};

/// Scalar field on the interfaces normal to one axis. For Axis::X there are
/// (nx+1) x ny entries, interface k sitting between cells k-1 and k; for
/// Axis::Y the layout is nx x (ny+1).
class InterfaceField {
 public:
  InterfaceField(const Grid2D& grid, Axis axis, double fill = 0.0);

  Axis axis() const { return axis_; }
  int ni() const { return ni_; }
  int nj() const { return nj_; }

  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(j) * ni_ + i]; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(j) * ni_ + i]; }

  /// Access by (line, interface position along the axis).
  double along(int line, int k) const { return axis_ == Axis::X ? (*this)(k, line) : (*this)(line, k); }
  double& along(int line, int k) { return axis_ == Axis::X ? (*this)(k, line) : (*this)(line, k); }

  std::span<const double> values() const& { return data_; }
  void values() && = delete;

 private:
  Axis axis_;
  int ni_, nj_;
  std::vector<double> data_;
};

/// Padded copy of a grid function with `ghost` layers on each side.
class PaddedField {
 public:
  PaddedField(const GridFunction& w, int ghost);

  int ghost() const { return g_; }
  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(j + g_) * stride_ + (i + g_)];
  }
  /// Row-major (nx+2g) x (ny+2g) storage, including corners.
  std::span<const double> values() const& { return data_; }
  void values() && = delete;
  int stride() const { return stride_; }

 private:
  int g_;
  int stride_;
  std::vector<double> data_;
};

/// Resolves a possibly out-of-range index into [0, n) under `boundary`.
int resolve_index(int i, int n, Boundary boundary);

InterfaceField interface_jump(const GridFunction& w, Axis dir);
InterfaceField interface_average(const GridFunction& w, Axis dir);

/// Pads `w` with `n_ghost` layers. Throws std::invalid_argument when
/// n_ghost < 1 or n_ghost > min(nx, ny).
PaddedField apply_boundary(const GridFunction& w, int n_ghost);

using PointFunction = std::function<double(double, double)>;

/// Cell average of `f` over cell (i,j) by tensor 2x2 Gauss-Legendre quadrature.
double cell_average(const Grid2D& grid, int i, int j, const PointFunction& f);

/// Cell averages of u0, exact for bicubic data. Throws NumericalError if u0
/// yields a non-finite value.
GridFunction project_initial_data(const Grid2D& grid, const PointFunction& u0);

/// Pairwise (tree) summation; the order depends only on the length.
double pairwise_sum(std::span<const double> v);

}  // namespace tecno
