#pragma once

#include <optional>
#include <vector>

#include "tecno/entropy.hpp"
#include "tecno/flux.hpp"
#include "tecno/grid.hpp"
#include "tecno/reconstruct.hpp"

namespace tecno {

/// One accepted time step. Increments are time integrals over the step,
/// accumulated with the stage weights of the integrator.
struct LedgerRow {
  long step = 0;
  double time = 0.0;
  double dt = 0.0;
  double total_mass = 0.0;
  double total_entropy = 0.0;
  double dissipation_increment = 0.0;
  double cube_x = 0.0;
  double cube_y = 0.0;
  double pair_x = 0.0;
  double pair_y = 0.0;
};

/// Smoothed Kruzkov entropy to monitor (k, delta).
struct KruzkovProbe {
  double k = 0.0;
  double delta = kDefaultKruzkovDelta;
};

/// Constants of the entropy-residual bound |r| <= C1 |[[u]]|^3 + C2 [[u]] <<u>>.
struct ResidualConstants {
  double c1 = 0.0;  ///< sampled sup of |r1| / |[[u]]|^3 over [-M, M]^2, plus 10%
  double c2 = 0.0;  ///< sup |eta''| on [-M, M] times d_high
};

ResidualConstants residual_constants(const EntropyPair& pair, const FluxSpec& flux,
                                     double linf_bound, double d_high, int samples = 2001);

/// Time-accumulated entropy residual measure for one entropy and its bound.
struct ResidualTracker {
  KruzkovProbe probe;
  EntropyPair pair;
  ResidualConstants constants;
  double residual_total = 0.0;
  double bound_total = 0.0;

  bool holds() const { return residual_total <= bound_total; }
};

struct EntropyLedger {
  std::vector<LedgerRow> rows;

  double sup_linf = 0.0;
  long linf_breaches = 0;

  /// Semi-discrete entropy identity, tracked at every right-hand-side
  /// evaluation: largest |lhs - rhs| and largest rhs (must stay <= 0).
  long rhs_evaluations = 0;
  double max_rate_defect = 0.0;
  double max_dissipation_rhs = -1.0;

  std::vector<ResidualTracker> residuals;

  double cumulative_dissipation() const;
  double cube_total() const;
  double pair_total() const;
};

/// Interface sums of one evaluation, per unit time:
/// sum |[[u]]|^3 * face length and sum [[u]] <<u>> * face length per axis.
struct WeakBvSums {
  double cube_x = 0.0;
  double cube_y = 0.0;
  double pair_x = 0.0;
  double pair_y = 0.0;
};

WeakBvSums weak_bv_sums(const GridFunction& u, const ReconJump& jumps);

/// sum over interfaces of D [[u]] <<u>> * face length (per unit time).
double dissipation_rate(const GridFunction& u, const ReconJump& jumps,
                        const NumericalFluxField& fluxes);

/// dissipation_rate * dt. Throws NumericalError if the result is below
/// -1e-14, which would mean the sign property failed.
double dissipation_increment(const GridFunction& u, const ReconJump& jumps,
                             const NumericalFluxField& fluxes, double dt);

struct WeakBvReport {
  double cube_total = 0.0;
  double pair_total = 0.0;
  double sup_linf = 0.0;
  /// cube_total <= 2 sup|u| pair_total
  bool holds = true;
  /// cube_total / (2 M pair_total) for the configured bound M (0 when both vanish).
  double ratio_to_bound = 0.0;
};

WeakBvReport weak_bv_report(const EntropyLedger& ledger, double linf_bound);

/// Q = avg(v) F - avg(psi) at an interface with total flux F.
double discrete_entropy_flux(const EntropyPair& pair, double u_left, double u_right, double flux,
                             Axis axis);

/// Entropy residuals r1 = [[v]] F~ - [[psi]] and r2 = -[[v]] D <<u>> on one
/// interface family.
struct ResidualSplit {
  InterfaceField r1;
  InterfaceField r2;
};

ResidualSplit residual_split(const EntropyPair& pair, const GridFunction& u, const ReconJump& jumps,
                             const NumericalFluxField& fluxes, Axis axis);

/// Instantaneous (per unit time) entropy residual measure
/// sum_cells |(r_{i+1/2} + r_{i-1/2}) / 2dx + (r_{j+1/2} + r_{j-1/2}) / 2dy| dx dy
/// and its bound C1 sum |[[u]]|^3 len + C2 sum [[u]] <<u>> len.
struct EntropyResidual {
  double residual_measure = 0.0;
  double bound_rhs = 0.0;
};

EntropyResidual entropy_residual(const EntropyPair& pair, const ResidualConstants& constants,
                                 const GridFunction& u, const ReconJump& jumps,
                                 const NumericalFluxField& fluxes);

/// Both sides of the semi-discrete square-entropy balance:
/// lhs = sum u rate dx dy + boundary entropy flux, rhs = -sum D <<u>> [[u]] len.
struct EntropyRateIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
};

EntropyRateIdentity entropy_rate_identity(const EntropyPair& square, const GridFunction& u,
                                          const GridFunction& rate, const ReconJump& jumps,
                                          const NumericalFluxField& fluxes);

double total_mass(const GridFunction& u);
double total_square_entropy(const GridFunction& u);

/// sum |u_ij - cell average of exact| dx dy, averages by the projection quadrature.
double l1_error(const GridFunction& u, const PointFunction& exact);

/// log(coarse/fine) / log(ratio); absent unless both errors are positive
/// and ratio > 1.
std::optional<double> observed_order(double coarse_error, double fine_error, double ratio);

struct ConvergenceRow {
  int nx = 0;
  int ny = 0;
  double l1_error = 0.0;
  std::optional<double> observed_order;
};

}  // namespace tecno
