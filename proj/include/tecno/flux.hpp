#pragma once

#include "tecno/entropy.hpp"
#include "tecno/grid.hpp"
#include "tecno/reconstruct.hpp"

namespace tecno {

/// Bounds 0 < d_low <= D <= d_high on the diffusion coefficients.
struct DiffusionBounds {
  double d_low = 1e-3;
  double d_high = 10.0;

  /// Throws std::invalid_argument unless 0 < d_low <= d_high < inf.
  void validate() const;
};

/// Total flux F, entropy-conservative part F~ and diffusion coefficient D
/// on one interface family, with F = F~ - D <<u>>.
struct AxisFluxes {
  InterfaceField total;
  InterfaceField conservative;
  InterfaceField diffusion;
};

struct NumericalFluxField {
  AxisFluxes x;
  AxisFluxes y;

  const AxisFluxes& along(Axis axis) const { return axis == Axis::X ? x : y; }
};

/// Two-point flux with [[u]] F~ = [[Psi]] (Psi the flux primitive), i.e.
/// entropy conservative for eta = u^2/2. Falls back to f of the midpoint
/// when |uR - uL| <= 1e-12 (1 + |uL| + |uR|).
double entropy_conservative_flux(double u_left, double u_right, const FluxComponent& f);

/// clamp(max(|f'(uL)|, |f'(uR)|) / 2, d_low, d_high).
double diffusion_coefficient(double u_left, double u_right, const FluxComponent& f,
                             const DiffusionBounds& bounds);

/// F = F~(u_L, u_R) - D <<u>> on every interface of both axes.
NumericalFluxField assemble_tecno_flux(const GridFunction& u, const ReconJump& jumps,
                                       const FluxSpec& spec, const DiffusionBounds& bounds);

}  // namespace tecno
