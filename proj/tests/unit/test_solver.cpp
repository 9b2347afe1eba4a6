#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "tecno/error.hpp"
#include "tecno/solver.hpp"

using namespace tecno;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Independent straight-line TECNO right-hand side for periodic Burgers,
// written from the formulas with plain arrays and modular indexing.
std::vector<double> oracle_rhs(const std::vector<double>& u, int nx, int ny, double dx, double dy,
                               double dlo, double dhi) {
  auto at = [&](int i, int j) { return u[((j % ny + ny) % ny) * nx + ((i % nx + nx) % nx)]; };
  auto slope = [](double a, double b, double c) {
    return std::abs(b - a) <= std::abs(c - b) ? b - a : c - b;
  };
  // Flux through the interface between cells p (left) and q (right), given
  // the values two cells out on both sides.
  auto flux = [&](double pm, double p, double q, double qp) {
    const double ft = (p * p + p * q + q * q) / 6.0;
    const double d = std::clamp(std::max(std::abs(p), std::abs(q)) / 2.0, dlo, dhi);
    const double wm = p + slope(pm, p, q) / 2.0;
    const double wp = q - slope(p, q, qp) / 2.0;
    return ft - d * (wp - wm);
  };
  std::vector<double> rate(u.size());
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const double fe = flux(at(i - 1, j), at(i, j), at(i + 1, j), at(i + 2, j));
      const double fw = flux(at(i - 2, j), at(i - 1, j), at(i, j), at(i + 1, j));
      const double fn = flux(at(i, j - 1), at(i, j), at(i, j + 1), at(i, j + 2));
      const double fs = flux(at(i, j - 2), at(i, j - 1), at(i, j), at(i, j + 1));
      rate[j * nx + i] = -(fe - fw) / dx - (fn - fs) / dy;
    }
  }
  return rate;
}

InitialValueProblem sine_burgers(int nx, int ny) {
  return {Grid2D::covering(0, 1, 0, 1, nx, ny, Boundary::Periodic), burgers_flux(),
          [](double x, double y) { return 0.5 + 0.4 * std::sin(kTwoPi * (x + 2 * y)); }};
}

}  // namespace

TEST_CASE("semidiscrete_rhs examples") {
  const DiffusionBounds bounds;
  SUBCASE("constant field") {
    GridFunction u(Grid2D(5, 5, 0.2, 0.2, 0, 0, Boundary::Periodic));
    for (double& v : u.values()) v = -0.7;
    const GridFunction r = semidiscrete_rhs(u, burgers_flux(), bounds);
    for (double v : r.values()) CHECK(v == 0.0);
  }
  SUBCASE("periodic rates sum to zero") {
    const InitialValueProblem p = sine_burgers(16, 12);
    const GridFunction u = project_initial_data(p.grid, p.u0);
    const GridFunction r = semidiscrete_rhs(u, p.flux, bounds);
    double sum = 0.0, scale = 0.0;
    for (double v : r.values()) {
      sum += v;
      scale += std::abs(v);
    }
    CHECK(std::abs(sum) <= 1e-13 * scale);
  }
  SUBCASE("Riemann step touches only the stencil footprint") {
    GridFunction u(Grid2D(12, 4, 0.1, 0.1, 0, 0, Boundary::Outflow));
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 12; ++i) u(i, j) = i < 6 ? 1.0 : 0.0;
    const GridFunction r = semidiscrete_rhs(u, burgers_flux(), bounds);
    for (int j = 0; j < 4; ++j) {
      for (int i = 0; i < 12; ++i) {
        if (i < 4 || i > 7) CHECK(r(i, j) == 0.0);
      }
      CHECK(r(5, j) != 0.0);
      CHECK(r(6, j) != 0.0);
    }
  }
  SUBCASE("matches the straight-line oracle") {
    const InitialValueProblem p = sine_burgers(9, 7);
    const GridFunction u = project_initial_data(p.grid, p.u0);
    const DiffusionBounds b{0.3, 0.4};  // exercises both clamps
    const GridFunction r = semidiscrete_rhs(u, p.flux, b);
    const std::vector<double> o = oracle_rhs({u.values().begin(), u.values().end()}, 9, 7,
                                             p.grid.dx(), p.grid.dy(), b.d_low, b.d_high);
    for (std::size_t n = 0; n < o.size(); ++n) CHECK(r.values()[n] == doctest::Approx(o[n]).epsilon(1e-12));
  }
}

TEST_CASE("stable_timestep examples") {
  const Grid2D g(5, 5, 0.1, 0.1, 0, 0, Boundary::Periodic);
  GridFunction u(g);
  CHECK(stable_timestep(u, linear_flux(1, 1), {1e-3, 1.0}, 0.4) == doctest::Approx(1.0 / 150).epsilon(1e-15));
  CHECK(stable_timestep(u, linear_flux(0, 0), {1e-3, 1.0}, 0.4) == doctest::Approx(0.4 / 40).epsilon(1e-15));
  for (double& v : u.values()) v = 0.9;
  const Grid2D g2(5, 5, 0.2, 0.2, 0, 0, Boundary::Periodic);
  GridFunction u2(g2, std::vector<double>(u.values().begin(), u.values().end()));
  const double dt1 = stable_timestep(u, burgers_flux(), {}, 0.5);
  CHECK(stable_timestep(u2, burgers_flux(), {}, 0.5) == doctest::Approx(2 * dt1).epsilon(1e-15));
}

TEST_CASE("ssprk2_step") {
  SolverConfig cfg;
  cfg.bounds = {1e-3, 1.0};
  SUBCASE("constant state is unchanged") {
    InitialValueProblem p{Grid2D(6, 6, 0.1, 0.1, 0, 0, Boundary::Outflow), burgers_flux(),
                          [](double, double) { return 0.3; }};
    SolverState s = initial_state(cfg, p);
    ssprk2_step(s, 0.01, cfg, p.flux);
    for (double v : s.u.values()) CHECK(v == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(s.t == 0.01);
    CHECK(s.step_count == 1);
    CHECK(s.ledger.rows.size() == 2u);
  }
  SUBCASE("linear advection conserves mass") {
    InitialValueProblem p{Grid2D::covering(0, 1, 0, 1, 20, 20, Boundary::Periodic), linear_flux(1, -0.5),
                          [](double x, double y) { return 1.0 + std::sin(kTwoPi * x) * std::cos(kTwoPi * y); }};
    SolverState s = initial_state(cfg, p);
    const double m0 = total_mass(s.u);
    for (int n = 0; n < 10; ++n) ssprk2_step(s, stable_timestep(s.u, p.flux, cfg.bounds, 0.4), cfg, p.flux);
    CHECK(std::abs(total_mass(s.u) - m0) <= 1e-13 * std::abs(m0));
  }
  SUBCASE("one step matches a hand-rolled two-stage oracle") {
    const InitialValueProblem p = sine_burgers(10, 8);
    SolverState s = initial_state(cfg, p);
    std::vector<double> u0(s.u.values().begin(), s.u.values().end());
    const double dt = 0.7 * stable_timestep(s.u, p.flux, cfg.bounds, 0.4);
    ssprk2_step(s, dt, cfg, p.flux);

    const double dx = p.grid.dx(), dy = p.grid.dy();
    const std::vector<double> r1 = oracle_rhs(u0, 10, 8, dx, dy, cfg.bounds.d_low, cfg.bounds.d_high);
    std::vector<double> stage(u0.size());
    for (std::size_t n = 0; n < u0.size(); ++n) stage[n] = u0[n] + dt * r1[n];
    const std::vector<double> r2 = oracle_rhs(stage, 10, 8, dx, dy, cfg.bounds.d_low, cfg.bounds.d_high);
    for (std::size_t n = 0; n < u0.size(); ++n) {
      const double expected = 0.5 * u0[n] + 0.5 * (stage[n] + dt * r2[n]);
      CHECK(s.u.values()[n] == doctest::Approx(expected).epsilon(1e-14));
    }
  }
  SUBCASE("invalid dt") {
    const InitialValueProblem p = sine_burgers(6, 6);
    SolverState s = initial_state(cfg, p);
    CHECK_THROWS_AS(ssprk2_step(s, 0.0, cfg, p.flux), NumericalError);
    CHECK_THROWS_AS(ssprk2_step(s, std::numeric_limits<double>::infinity(), cfg, p.flux), NumericalError);
  }
}

TEST_CASE("SolverConfig validation") {
  SolverConfig c;
  CHECK_NOTHROW(c.validate());
  c.cfl = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.cfl = 1.5;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.t_end = -1.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.linf_bound = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.bounds = {1.0, 0.5};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.diagnostics.kruzkov = {{0.0, 0.0}};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("run") {
  SolverConfig cfg;
  cfg.bounds = {1e-3, 1.0};
  SUBCASE("t_end = 0 returns the projected data") {
    cfg.t_end = 0.0;
    const InitialValueProblem p = sine_burgers(8, 8);
    const RunResult r = run(cfg, p);
    const GridFunction u0 = project_initial_data(p.grid, p.u0);
    CHECK(r.state.step_count == 0);
    CHECK(r.ledger().rows.size() == 1u);
    for (std::size_t n = 0; n < u0.values().size(); ++n) CHECK(r.state.u.values()[n] == u0.values()[n]);
    CHECK_FALSE(r.failure);
  }
  SUBCASE("advection over a period converges") {
    cfg.t_end = 1.0;
    double prev = 1e300;
    for (int n : {16, 32}) {
      InitialValueProblem p{Grid2D::covering(0, 1, 0, 1, n, n, Boundary::Periodic), linear_flux(1, 1),
                            [](double x, double y) { return std::sin(kTwoPi * x) * std::sin(kTwoPi * y); }};
      const RunResult r = run(cfg, p);
      CHECK(r.state.t == 1.0);
      const double err = l1_error(r.state.u, p.u0);
      CHECK(err < prev / 2);
      prev = err;
    }
  }
  SUBCASE("snapshots land on the requested times") {
    cfg.t_end = 0.1;
    cfg.snapshot_interval = 0.03;
    const RunResult r = run(cfg, sine_burgers(8, 8));
    REQUIRE(r.snapshots.size() == 5u);
    const double expected[] = {0.0, 0.03, 0.06, 0.09, 0.1};
    for (int n = 0; n < 5; ++n) CHECK(r.snapshots[n].u.time() == doctest::Approx(expected[n]).epsilon(1e-14));
    CHECK(r.snapshots.back().step == r.state.step_count);
    CHECK(r.state.t == 0.1);
    CHECK(r.ledger().rows.back().time == 0.1);
  }
  SUBCASE("L-infinity monitor records breaches without stopping") {
    cfg.t_end = 0.05;
    cfg.linf_bound = 0.5;
    const RunResult r = run(cfg, sine_burgers(8, 8));
    CHECK_FALSE(r.failure);
    CHECK(r.ledger().linf_breaches == static_cast<long>(r.ledger().rows.size()));
    CHECK(r.ledger().sup_linf == doctest::Approx(0.9).epsilon(0.05));
  }
  SUBCASE("numerical failure keeps the partial result") {
    cfg.t_end = 0.1;
    auto f = FluxComponent::general([](double u) { return u; },
                                    [](double u) { return u > 0.5 ? std::numeric_limits<double>::infinity() : 1.0; });
    InitialValueProblem p{Grid2D::covering(0, 1, 0, 1, 6, 6, Boundary::Periodic), general_flux("bad", f, f),
                          [](double x, double) { return x; }};
    const RunResult r = run(cfg, p);
    REQUIRE(r.failure);
    CHECK(r.state.t == 0.0);
    CHECK(r.ledger().rows.size() == 1u);
  }
}

TEST_CASE("entropy balance and monotone square entropy on a Burgers run") {
  SolverConfig cfg;
  cfg.bounds = {1e-3, 1.0};
  cfg.t_end = 0.3;  // past the first shock of this profile
  const RunResult r = run(cfg, sine_burgers(24, 24));
  const EntropyLedger& l = r.ledger();
  CHECK(l.rhs_evaluations == 2 * r.state.step_count);
  CHECK(l.max_rate_defect <= 1e-10);
  CHECK(l.max_dissipation_rhs <= 0.0);
  for (std::size_t n = 1; n < l.rows.size(); ++n) {
    const LedgerRow& row = l.rows[n];
    CHECK(row.dissipation_increment >= 0.0);
    CHECK(row.total_entropy <= l.rows[n - 1].total_entropy + 10.0 * std::pow(row.dt, 3));
  }
  CHECK(l.cumulative_dissipation() <= l.rows.front().total_entropy);
}
