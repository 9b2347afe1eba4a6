#include "tecno/flux.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tecno/error.hpp"

namespace tecno {

void DiffusionBounds::validate() const {
  if (!(d_low > 0.0) || !(d_low <= d_high) || !std::isfinite(d_high)) {
    throw std::invalid_argument("DiffusionBounds: need 0 < d_low <= d_high, got [" +
                                std::to_string(d_low) + ", " + std::to_string(d_high) + "]");
  }
}

double entropy_conservative_flux(double u_left, double u_right, const FluxComponent& f) {
  const double eps = 1e-12 * (1.0 + std::abs(u_left) + std::abs(u_right));
  const double flux = std::abs(u_right - u_left) > eps ? f.mean_value(u_left, u_right)
                                                       : f.value(0.5 * (u_left + u_right));
  if (!std::isfinite(flux)) throw NumericalError("entropy_conservative_flux: non-finite flux");
  return flux;
}

double diffusion_coefficient(double u_left, double u_right, const FluxComponent& f,
                             const DiffusionBounds& bounds) {
  const double speed = std::max(std::abs(f.derivative(u_left)), std::abs(f.derivative(u_right)));
  return std::clamp(0.5 * speed, bounds.d_low, bounds.d_high);
}

namespace {

AxisFluxes assemble_axis(const PaddedField& p, const Grid2D& grid, const InterfaceField& jumps,
                         const FluxComponent& f, const DiffusionBounds& bounds, Axis dir) {
  AxisFluxes out{InterfaceField(grid, dir), InterfaceField(grid, dir), InterfaceField(grid, dir)};
  const int n = grid.extent(dir);
  for (int l = 0; l < grid.lines(dir); ++l) {
    for (int k = 0; k <= n; ++k) {
      const double ul = dir == Axis::X ? p(k - 1, l) : p(l, k - 1);
      const double ur = dir == Axis::X ? p(k, l) : p(l, k);
      const double fc = entropy_conservative_flux(ul, ur, f);
      const double d = diffusion_coefficient(ul, ur, f, bounds);
      const double total = fc - d * jumps.along(l, k);
      if (!std::isfinite(total)) throw NumericalError("assemble_tecno_flux: non-finite flux");
      out.conservative.along(l, k) = fc;
      out.diffusion.along(l, k) = d;
      out.total.along(l, k) = total;
    }
  }
  return out;
}

}  // namespace

NumericalFluxField assemble_tecno_flux(const GridFunction& u, const ReconJump& jumps,
                                       const FluxSpec& spec, const DiffusionBounds& bounds) {
  bounds.validate();
  u.require_finite("assemble_tecno_flux");
  const PaddedField p = apply_boundary(u, 1);
  return NumericalFluxField{
      assemble_axis(p, u.grid(), jumps.x, spec.x, bounds, Axis::X),
      assemble_axis(p, u.grid(), jumps.y, spec.y, bounds, Axis::Y)};
}

}  // namespace tecno
