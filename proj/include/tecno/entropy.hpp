#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "tecno/grid.hpp"

namespace tecno {

using ScalarFunction = std::function<double(double)>;

/// Coefficients of c0 + c1*u + c2*u^2.
struct Quadratic {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

/// One component of the flux f = (f^x, f^y) with its derivative and the
/// primitive normalized to vanish at u = 0.
class FluxComponent {
 public:
  static FluxComponent quadratic(Quadratic coefficients);
  /// Component given by callables; a missing primitive is computed by
  /// adaptive quadrature.
  static FluxComponent general(ScalarFunction f, ScalarFunction df, ScalarFunction primitive = {});

  double value(double u) const {
    if (poly_) return poly_->c0 + u * (poly_->c1 + u * poly_->c2);
    return f_(u);
  }
  double derivative(double u) const {
    if (poly_) return poly_->c1 + 2.0 * poly_->c2 * u;
    return df_(u);
  }
  double primitive(double u) const;

  /// (1/(b-a)) * integral of f over [a, b], evaluated without cancellation
  /// for quadratics and by quadrature otherwise. Requires a != b.
  double mean_value(double a, double b) const;

  const std::optional<Quadratic>& coefficients() const { return poly_; }

 private:
  std::optional<Quadratic> poly_;
  ScalarFunction f_, df_, primitive_;
};

struct FluxSpec {
  std::string name;
  FluxComponent x;
  FluxComponent y;

  const FluxComponent& component(Axis axis) const { return axis == Axis::X ? x : y; }
};

/// f = (a*u, b*u).
FluxSpec linear_flux(double a, double b);
/// f = (u^2/2, u^2/2).
FluxSpec burgers_flux();
FluxSpec general_flux(std::string name, FluxComponent x, FluxComponent y);

/// Registry lookup: "burgers" or "linear(a,b)". Throws ConfigError on an
/// unknown or malformed name.
FluxSpec flux_from_name(std::string_view name);

/// Convex entropy with its entropy flux and entropy potential per axis.
struct EntropyPair {
  std::string name;
  ScalarFunction eta, deta, ddeta;
  ScalarFunction q_x, q_y;
  ScalarFunction psi_x, psi_y;

  const ScalarFunction& q(Axis axis) const { return axis == Axis::X ? q_x : q_y; }
  const ScalarFunction& psi(Axis axis) const { return axis == Axis::X ? psi_x : psi_y; }
};

/// eta = u^2/2. The potential coincides with the flux primitive.
EntropyPair square_entropy_pair(const FluxSpec& flux);

/// eta = sqrt((u-k)^2 + delta^2) - delta, a C^2 convex approximation of |u - k|.
/// Throws std::invalid_argument for delta <= 0.
EntropyPair smoothed_kruzkov_pair(const FluxSpec& flux, double k, double delta);

inline constexpr double kDefaultKruzkovDelta = 1e-2;

/// Pointwise v = eta'(u). Throws NumericalError on non-finite output.
GridFunction entropy_variable(const EntropyPair& pair, const GridFunction& w);

}  // namespace tecno
