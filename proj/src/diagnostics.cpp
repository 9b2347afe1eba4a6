#include "tecno/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tecno/error.hpp"

namespace tecno {

namespace {

// Calls fn(line, k, u_left, u_right) for every owned interface normal to dir.
template <class Fn>
void for_owned_interfaces(const GridFunction& u, Axis dir, Fn&& fn) {
  const Grid2D& grid = u.grid();
  const int n = grid.extent(dir);
  for (int l = 0; l < grid.lines(dir); ++l) {
    for (int k = grid.first_owned_interface(); k <= n; ++k) {
      const double ul = dir == Axis::X ? u.ghost(k - 1, l) : u.ghost(l, k - 1);
      const double ur = dir == Axis::X ? u.ghost(k, l) : u.ghost(l, k);
      fn(l, k, ul, ur);
    }
  }
}

}  // namespace

double EntropyLedger::cumulative_dissipation() const {
  double s = 0.0;
  for (const auto& r : rows) s += r.dissipation_increment;
  return s;
}

double EntropyLedger::cube_total() const {
  double s = 0.0;
  for (const auto& r : rows) s += r.cube_x + r.cube_y;
  return s;
}

double EntropyLedger::pair_total() const {
  double s = 0.0;
  for (const auto& r : rows) s += r.pair_x + r.pair_y;
  return s;
}

WeakBvSums weak_bv_sums(const GridFunction& u, const ReconJump& jumps) {
  WeakBvSums s;
  for (Axis dir : {Axis::X, Axis::Y}) {
    const double len = u.grid().face_length(dir);
    const InterfaceField& recon = jumps.along(dir);
    double cube = 0.0, pair = 0.0;
    for_owned_interfaces(u, dir, [&](int l, int k, double ul, double ur) {
      const double jump = ur - ul;
      cube += std::abs(jump) * jump * jump;
      pair += jump * recon.along(l, k);
    });
    (dir == Axis::X ? s.cube_x : s.cube_y) = cube * len;
    (dir == Axis::X ? s.pair_x : s.pair_y) = pair * len;
  }
  return s;
}

double dissipation_rate(const GridFunction& u, const ReconJump& jumps,
                        const NumericalFluxField& fluxes) {
  double total = 0.0;
  for (Axis dir : {Axis::X, Axis::Y}) {
    const InterfaceField& recon = jumps.along(dir);
    const InterfaceField& d = fluxes.along(dir).diffusion;
    double sum = 0.0;
    for_owned_interfaces(u, dir, [&](int l, int k, double ul, double ur) {
      sum += d.along(l, k) * (ur - ul) * recon.along(l, k);
    });
    total += sum * u.grid().face_length(dir);
  }
  return total;
}

double dissipation_increment(const GridFunction& u, const ReconJump& jumps,
                             const NumericalFluxField& fluxes, double dt) {
  const double e = dissipation_rate(u, jumps, fluxes) * dt;
  if (e < -1e-14) {
    throw NumericalError("dissipation_increment: negative entropy dissipation " +
                         std::to_string(e) + " (sign property breached)");
  }
  return e;
}

WeakBvReport weak_bv_report(const EntropyLedger& ledger, double linf_bound) {
  WeakBvReport r;
  r.cube_total = ledger.cube_total();
  r.pair_total = ledger.pair_total();
  r.sup_linf = ledger.sup_linf;
  r.holds = r.cube_total <= 2.0 * r.sup_linf * r.pair_total;
  const double denom = 2.0 * linf_bound * r.pair_total;
  r.ratio_to_bound = denom > 0.0 ? r.cube_total / denom
                                 : (r.cube_total > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
  return r;
}

double discrete_entropy_flux(const EntropyPair& pair, double u_left, double u_right, double flux,
                             Axis axis) {
  const auto& psi = pair.psi(axis);
  return 0.5 * (pair.deta(u_left) + pair.deta(u_right)) * flux -
         0.5 * (psi(u_left) + psi(u_right));
}

ResidualConstants residual_constants(const EntropyPair& pair, const FluxSpec& flux,
                                     double linf_bound, double d_high, int samples) {
  if (!(linf_bound > 0.0) || samples < 3) {
    throw std::invalid_argument("residual_constants: need M > 0 and at least 3 samples");
  }
  std::vector<double> u(samples), v(samples), psi_x(samples), psi_y(samples);
  double eta2 = 0.0;
  for (int m = 0; m < samples; ++m) {
    u[m] = -linf_bound + 2.0 * linf_bound * m / (samples - 1);
    v[m] = pair.deta(u[m]);
    psi_x[m] = pair.psi_x(u[m]);
    psi_y[m] = pair.psi_y(u[m]);
    eta2 = std::max(eta2, std::abs(pair.ddeta(u[m])));
  }
  if (!std::isfinite(eta2)) {
    throw NumericalError("residual_constants: eta'' is unbounded on [-M, M]");
  }
  double factor = 0.0;
  for (int a = 0; a < samples; ++a) {
    for (int b = a + 1; b < samples; ++b) {
      const double jump = u[b] - u[a];
      const double cube = jump * jump * jump;
      const double dv = v[b] - v[a];
      const double rx = dv * entropy_conservative_flux(u[a], u[b], flux.x) - (psi_x[b] - psi_x[a]);
      const double ry = dv * entropy_conservative_flux(u[a], u[b], flux.y) - (psi_y[b] - psi_y[a]);
      factor = std::max(factor, std::max(std::abs(rx), std::abs(ry)) / cube);
    }
  }
  return ResidualConstants{1.1 * factor, eta2 * d_high};
}

ResidualSplit residual_split(const EntropyPair& pair, const GridFunction& u, const ReconJump& jumps,
                             const NumericalFluxField& fluxes, Axis axis) {
  const Grid2D& grid = u.grid();
  ResidualSplit out{InterfaceField(grid, axis), InterfaceField(grid, axis)};
  const AxisFluxes& f = fluxes.along(axis);
  const InterfaceField& recon = jumps.along(axis);
  const auto& psi = pair.psi(axis);
  const int n = grid.extent(axis);
  for (int l = 0; l < grid.lines(axis); ++l) {
    for (int k = 0; k <= n; ++k) {
      const double ul = axis == Axis::X ? u.ghost(k - 1, l) : u.ghost(l, k - 1);
      const double ur = axis == Axis::X ? u.ghost(k, l) : u.ghost(l, k);
      const double dv = pair.deta(ur) - pair.deta(ul);
      out.r1.along(l, k) = dv * f.conservative.along(l, k) - (psi(ur) - psi(ul));
      out.r2.along(l, k) = -dv * f.diffusion.along(l, k) * recon.along(l, k);
    }
  }
  return out;
}

EntropyResidual entropy_residual(const EntropyPair& pair, const ResidualConstants& constants,
                                 const GridFunction& u, const ReconJump& jumps,
                                 const NumericalFluxField& fluxes) {
  const Grid2D& grid = u.grid();
  const int nx = grid.nx(), ny = grid.ny();

  // Entropy variable and potentials once per cell (ghosts included).
  const PaddedField p = apply_boundary(u, 1);
  const int stride = nx + 2;
  std::vector<double> v((nx + 2) * (ny + 2)), px(v.size()), py(v.size());
  for (int j = -1; j <= ny; ++j) {
    for (int i = -1; i <= nx; ++i) {
      const std::size_t n = static_cast<std::size_t>(j + 1) * stride + (i + 1);
      const double w = p(i, j);
      v[n] = pair.deta(w);
      px[n] = pair.psi_x(w);
      py[n] = pair.psi_y(w);
    }
  }
  auto at = [stride](int i, int j) { return static_cast<std::size_t>(j + 1) * stride + (i + 1); };

  // r on x-interface k between cells k-1 and k of row j, and similarly in y.
  auto rx = [&](int k, int j) {
    const std::size_t a = at(k - 1, j), b = at(k, j);
    return (v[b] - v[a]) * fluxes.x.total(k, j) - (px[b] - px[a]);
  };
  auto ry = [&](int i, int k) {
    const std::size_t a = at(i, k - 1), b = at(i, k);
    return (v[b] - v[a]) * fluxes.y.total(i, k) - (py[b] - py[a]);
  };

  EntropyResidual out;
  const double dx = grid.dx(), dy = grid.dy();
  double measure = 0.0;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const double c = (rx(i + 1, j) + rx(i, j)) / (2.0 * dx) + (ry(i, j + 1) + ry(i, j)) / (2.0 * dy);
      measure += std::abs(c);
    }
  }
  out.residual_measure = measure * dx * dy;

  const WeakBvSums s = weak_bv_sums(u, jumps);
  out.bound_rhs = constants.c1 * (s.cube_x + s.cube_y) + constants.c2 * (s.pair_x + s.pair_y);
  if (!std::isfinite(out.residual_measure) || !std::isfinite(out.bound_rhs)) {
    throw NumericalError("entropy_residual: non-finite residual or bound");
  }
  return out;
}

EntropyRateIdentity entropy_rate_identity(const EntropyPair& square, const GridFunction& u,
                                          const GridFunction& rate, const ReconJump& jumps,
                                          const NumericalFluxField& fluxes) {
  const Grid2D& grid = u.grid();
  EntropyRateIdentity id;
  std::vector<double> products(grid.cell_count());
  auto uv = u.values();
  auto rv = rate.values();
  for (std::size_t n = 0; n < products.size(); ++n) products[n] = uv[n] * rv[n];
  id.lhs = pairwise_sum(products) * grid.dx() * grid.dy();

  if (grid.boundary() == Boundary::Outflow) {
    // Entropy flux leaving through the boundary interfaces.
    double boundary = 0.0;
    for (Axis dir : {Axis::X, Axis::Y}) {
      const int n = grid.extent(dir);
      const InterfaceField& f = fluxes.along(dir).total;
      double sum = 0.0;
      for (int l = 0; l < grid.lines(dir); ++l) {
        auto value = [&](int c) { return dir == Axis::X ? u.ghost(c, l) : u.ghost(l, c); };
        sum += discrete_entropy_flux(square, value(n - 1), value(n), f.along(l, n), dir) -
               discrete_entropy_flux(square, value(-1), value(0), f.along(l, 0), dir);
      }
      boundary += sum * grid.face_length(dir);
    }
    id.lhs += boundary;
  }
  id.rhs = -dissipation_rate(u, jumps, fluxes);
  return id;
}

double total_mass(const GridFunction& u) {
  return pairwise_sum(u.values()) * u.grid().dx() * u.grid().dy();
}

double total_square_entropy(const GridFunction& u) {
  std::vector<double> e(u.values().size());
  auto v = u.values();
  for (std::size_t n = 0; n < e.size(); ++n) e[n] = 0.5 * v[n] * v[n];
  return pairwise_sum(e) * u.grid().dx() * u.grid().dy();
}

double l1_error(const GridFunction& u, const PointFunction& exact) {
  const Grid2D& grid = u.grid();
  std::vector<double> err(grid.cell_count());
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = 0; i < grid.nx(); ++i) {
      err[grid.index(i, j)] = std::abs(u(i, j) - cell_average(grid, i, j, exact));
    }
  }
  return pairwise_sum(err) * grid.dx() * grid.dy();
}

std::optional<double> observed_order(double coarse_error, double fine_error, double ratio) {
  if (!(coarse_error > 0.0) || !(fine_error > 0.0) || !(ratio > 1.0)) return std::nullopt;
  if (!std::isfinite(coarse_error) || !std::isfinite(fine_error)) return std::nullopt;
  return std::log(coarse_error / fine_error) / std::log(ratio);
}

}  // namespace tecno
