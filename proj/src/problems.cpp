#include "tecno/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tecno/error.hpp"

namespace tecno {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void reject(const std::string& problem, const char* key, bool present) {
  if (present) throw ConfigError("problem '" + problem + "' does not take parameter '" + key + "'");
}

ProblemSpec advect_smooth(const ProblemParameters& p) {
  const std::string name = "advect-smooth";
  reject(name, "u_left", p.u_left.has_value());
  reject(name, "u_right", p.u_right.has_value());
  double a = p.a.value_or(1.0);
  double b = p.b.value_or(1.0);
  if (p.flux) {
    const FluxSpec f = flux_from_name(*p.flux);
    const auto& cx = f.x.coefficients();
    const auto& cy = f.y.coefficients();
    if (!cx || !cy || cx->c0 != 0.0 || cx->c2 != 0.0 || cy->c0 != 0.0 || cy->c2 != 0.0) {
      throw ConfigError("advect-smooth needs a linear(a,b) flux, got '" + *p.flux + "'");
    }
    if ((p.a && *p.a != cx->c1) || (p.b && *p.b != cy->c1)) {
      throw ConfigError("advect-smooth: flux and a/b parameters disagree");
    }
    a = cx->c1;
    b = cy->c1;
  }
  ProblemSpec s;
  s.name = name;
  std::ostringstream d;
  d << "linear advection f=(a*u, b*u) with a=" << a << ", b=" << b
    << " of sin(2 pi x) sin(2 pi y), periodic unit square";
  s.description = d.str();
  s.flux = linear_flux(a, b);
  s.u0 = [](double x, double y) { return std::sin(kTwoPi * x) * std::sin(kTwoPi * y); };
  s.boundary = Boundary::Periodic;
  s.linf_bound = 1.0;
  s.exact = [a, b](double x, double y, double t) {
    return std::sin(kTwoPi * (x - a * t)) * std::sin(kTwoPi * (y - b * t));
  };
  return s;
}

ProblemSpec burgers_smooth(const ProblemParameters& p) {
  const std::string name = "burgers-smooth";
  reject(name, "a", p.a.has_value());
  reject(name, "b", p.b.has_value());
  reject(name, "u_left", p.u_left.has_value());
  reject(name, "u_right", p.u_right.has_value());
  if (p.flux && *p.flux != "burgers") throw ConfigError("burgers-smooth needs the burgers flux");

  ProblemSpec s;
  s.name = name;
  s.description = "Burgers f=(u^2/2, u^2/2) with u0 = 0.5 + 0.4 sin(2 pi (x+y)), periodic; "
                  "oracle by characteristics before the first shock";
  s.flux = burgers_flux();
  auto u0_line = [](double xi) { return 0.5 + 0.4 * std::sin(kTwoPi * xi); };
  s.u0 = [u0_line](double x, double y) { return u0_line(x + y); };
  s.boundary = Boundary::Periodic;
  s.linf_bound = 1.0;
  // Along xi = x + y the profile moves with speed 2u; characteristics first
  // cross at t* = 1 / (2 * max(-d u0/d xi)) = 1 / (1.6 pi).
  s.oracle_horizon = 1.0 / (1.6 * std::numbers::pi);
  s.exact = [u0_line](double x, double y, double t) {
    const double xi = x + y;
    // Solve U = u0(xi - 2 t U); g(U) = U - u0(xi - 2tU) is increasing before t*.
    double lo = 0.1, hi = 0.9;
    double u = u0_line(xi - 2.0 * t * u0_line(xi));
    for (int it = 0; it < 100; ++it) {
      const double g = u - u0_line(xi - 2.0 * t * u);
      if (g == 0.0) break;
      (g > 0.0 ? hi : lo) = u;
      const double dg = 1.0 + 2.0 * t * 0.4 * kTwoPi * std::cos(kTwoPi * (xi - 2.0 * t * u));
      double next = u - g / dg;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - u) <= 1e-16) {
        u = next;
        break;
      }
      u = next;
    }
    return u;
  };
  return s;
}

ProblemSpec burgers_riemann_x(const ProblemParameters& p) {
  const std::string name = "burgers-riemann-x";
  reject(name, "a", p.a.has_value());
  reject(name, "b", p.b.has_value());
  if (p.flux && *p.flux != "burgers") throw ConfigError("burgers-riemann-x needs the burgers flux");
  const double ul = p.u_left.value_or(1.0);
  const double ur = p.u_right.value_or(0.0);
  if (!std::isfinite(ul) || !std::isfinite(ur)) throw ConfigError("Riemann states must be finite");

  ProblemSpec s;
  s.name = name;
  std::ostringstream d;
  d << "Burgers f=(u^2/2, u^2/2) Riemann problem in x, u_left=" << ul << ", u_right=" << ur
    << ", jump at x=0.5, constant in y, outflow";
  s.description = d.str();
  s.flux = burgers_flux();
  s.u0 = [ul, ur](double x, double) { return x < 0.5 ? ul : ur; };
  s.boundary = Boundary::Outflow;
  s.linf_bound = std::max(std::abs(ul), std::abs(ur));
  if (s.linf_bound == 0.0) s.linf_bound = 1.0;
  // The profile does not depend on y, so the y-flux derivative term vanishes
  // identically and the 1D solution is exact.
  s.exact = [ul, ur](double x, double, double t) {
    return burgers_riemann_solution(ul, ur, 0.5, x, t);
  };
  return s;
}

}  // namespace

double burgers_riemann_solution(double u_left, double u_right, double x_jump, double x, double t) {
  const double z = x - x_jump;
  if (t <= 0.0) return z < 0.0 ? u_left : u_right;
  if (u_left > u_right) {
    const double speed = 0.5 * (u_left + u_right);
    return z < speed * t ? u_left : u_right;
  }
  return std::clamp(z / t, u_left, u_right);
}

Grid2D ProblemSpec::grid(int nx, int ny) const {
  return Grid2D::covering(x0, x1, y0, y1, nx, ny, boundary);
}

InitialValueProblem ProblemSpec::initial_value_problem(int nx, int ny) const {
  return InitialValueProblem{grid(nx, ny), flux, u0};
}

PointFunction ProblemSpec::exact_at(double t) const {
  if (!exact) throw ConfigError("problem '" + name + "' has no exact-solution oracle");
  if (t > oracle_horizon) {
    throw ConfigError("problem '" + name + "': oracle only valid up to t = " +
                      std::to_string(oracle_horizon));
  }
  return [f = exact, t](double x, double y) { return f(x, y, t); };
}

std::vector<ProblemSpec> registry() {
  return {advect_smooth({}), burgers_smooth({}), burgers_riemann_x({})};
}

ProblemSpec make_problem(std::string_view name, const ProblemParameters& params) {
  if (name == "advect-smooth") return advect_smooth(params);
  if (name == "burgers-smooth") return burgers_smooth(params);
  if (name == "burgers-riemann-x") return burgers_riemann_x(params);
  throw ConfigError("unknown problem '" + std::string(name) + "'");
}

}  // namespace tecno
