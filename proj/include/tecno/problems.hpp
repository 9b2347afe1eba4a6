#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tecno/entropy.hpp"
#include "tecno/grid.hpp"
#include "tecno/solver.hpp"

namespace tecno {

using SpaceTimeFunction = std::function<double(double, double, double)>;

/// Optional overrides for a registered problem. Parameters a problem does
/// not use are rejected.
struct ProblemParameters {
  std::optional<double> a, b;               // advect-smooth velocities
  std::optional<double> u_left, u_right;    // burgers-riemann-x states
  std::optional<std::string> flux;          // registry flux name
};

struct ProblemSpec {
  std::string name;
  std::string description;
  FluxSpec flux;
  PointFunction u0;
  Boundary boundary = Boundary::Periodic;
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  /// sup |u0|, the natural choice for the a-priori bound M.
  double linf_bound = 1.0;
  /// Exact solution u(x, y, t); empty when no oracle is known.
  SpaceTimeFunction exact;
  /// Oracle valid for t <= oracle_horizon.
  double oracle_horizon = std::numeric_limits<double>::infinity();

  Grid2D grid(int nx, int ny) const;
  InitialValueProblem initial_value_problem(int nx, int ny) const;

  bool has_oracle_at(double t) const { return static_cast<bool>(exact) && t <= oracle_horizon; }
  /// Exact solution frozen at time t. Throws ConfigError without a valid oracle.
  PointFunction exact_at(double t) const;
};

/// All registered problems with default parameters.
std::vector<ProblemSpec> registry();

/// Registered problem by name with overrides. Throws ConfigError for an
/// unknown name or a parameter the problem does not take.
ProblemSpec make_problem(std::string_view name, const ProblemParameters& params = {});

/// Entropy solution of the 1D Burgers Riemann problem with the jump at x_jump.
double burgers_riemann_solution(double u_left, double u_right, double x_jump, double x, double t);

}  // namespace tecno
