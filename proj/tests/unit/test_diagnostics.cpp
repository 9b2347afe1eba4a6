#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "tecno/diagnostics.hpp"
#include "tecno/error.hpp"
#include "tecno/solver.hpp"

using namespace tecno;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

GridFunction random_field(const Grid2D& g, std::mt19937_64& rng, double m = 1.0) {
  std::uniform_real_distribution<double> d(-m, m);
  GridFunction u(g);
  for (double& v : u.values()) v = d(rng);
  return u;
}

struct Eval {
  ReconJump jumps;
  NumericalFluxField fluxes;
};

Eval evaluate(const GridFunction& u, const FluxSpec& f, const DiffusionBounds& b) {
  ReconJump j = reconstruct_jumps(u);
  NumericalFluxField fl = assemble_tecno_flux(u, j, f, b);
  return {std::move(j), std::move(fl)};
}

}  // namespace

TEST_CASE("dissipation_increment examples") {
  const FluxSpec b = burgers_flux();
  SUBCASE("constant field") {
    GridFunction u(Grid2D(5, 5, 0.1, 0.1, 0, 0, Boundary::Periodic));
    for (double& v : u.values()) v = 0.4;
    const Eval e = evaluate(u, b, {});
    CHECK(dissipation_increment(u, e.jumps, e.fluxes, 0.01) == 0.0);
  }
  SUBCASE("single x-step") {
    // Three identical lines, each contributing 0.5 * 1 * 1 * dy * dt = 5e-4.
    GridFunction u(Grid2D(6, 3, 0.1, 0.1, 0, 0, Boundary::Outflow));
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 6; ++i) u(i, j) = i < 3 ? 0.0 : 1.0;
    const Eval e = evaluate(u, b, {});
    CHECK(dissipation_increment(u, e.jumps, e.fluxes, 0.01) == doctest::Approx(3 * 5e-4).epsilon(1e-14));
  }
  SUBCASE("non-negative on random fields") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 10000; ++t) {
      const Boundary bc = t % 2 ? Boundary::Periodic : Boundary::Outflow;
      const GridFunction u = random_field(Grid2D(5, 4, 0.1, 0.3, 0, 0, bc), rng, 2.0);
      const Eval e = evaluate(u, b, {});
      CHECK(dissipation_increment(u, e.jumps, e.fluxes, 0.01) >= 0.0);
    }
  }
  SUBCASE("a sign breach is a hard error") {
    GridFunction u(Grid2D(6, 3, 0.1, 0.1, 0, 0, Boundary::Outflow));
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 6; ++i) u(i, j) = i < 3 ? 0.0 : 1.0;
    Eval e = evaluate(u, b, {});
    for (int j = 0; j < 3; ++j) e.jumps.x(3, j) = -1.0;
    CHECK_THROWS_AS(dissipation_increment(u, e.jumps, e.fluxes, 0.01), NumericalError);
  }
}

TEST_CASE("discrete_entropy_flux examples") {
  const EntropyPair sb = square_entropy_pair(burgers_flux());
  CHECK(discrete_entropy_flux(sb, 0.0, 1.0, 1.0 / 6.0, Axis::X) == doctest::Approx(0.0).epsilon(1e-15));
  const EntropyPair sl = square_entropy_pair(linear_flux(1.0, 0.0));
  CHECK(discrete_entropy_flux(sl, 1.0, 1.0, 1.0, Axis::X) == 0.5);

  // Consistency Q(u, u) = q(u) for every pair.
  const FluxSpec f = burgers_flux();
  std::vector<EntropyPair> pairs{sb};
  for (double k : {-0.5, 0.0, 0.5}) pairs.push_back(smoothed_kruzkov_pair(f, k, 1e-2));
  for (const EntropyPair& p : pairs) {
    for (double u = -2.0; u <= 2.0; u += 0.125) {
      for (Axis ax : {Axis::X, Axis::Y}) {
        const double q = discrete_entropy_flux(p, u, u, f.component(ax).value(u), ax);
        CHECK(q == doctest::Approx(p.q(ax)(u)).epsilon(1e-12).scale(1.0));
      }
    }
  }
}

TEST_CASE("residual split and entropy residual") {
  std::mt19937_64 rng(31);
  const FluxSpec f = burgers_flux();
  const DiffusionBounds bounds{1e-3, 1.0};
  const GridFunction u = random_field(Grid2D(8, 7, 0.125, 0.1, 0, 0, Boundary::Periodic), rng);
  const Eval e = evaluate(u, f, bounds);

  SUBCASE("square entropy: r1 vanishes and r2 is non-positive") {
    const EntropyPair sq = square_entropy_pair(f);
    for (Axis ax : {Axis::X, Axis::Y}) {
      const ResidualSplit s = residual_split(sq, u, e.jumps, e.fluxes, ax);
      for (double v : s.r1.values()) CHECK(std::abs(v) <= 1e-15);
      for (double v : s.r2.values()) CHECK(v <= 0.0);
    }
  }
  SUBCASE("measure agrees with the split residuals") {
    const EntropyPair kr = smoothed_kruzkov_pair(f, 0.1, 1e-2);
    const ResidualSplit sx = residual_split(kr, u, e.jumps, e.fluxes, Axis::X);
    const ResidualSplit sy = residual_split(kr, u, e.jumps, e.fluxes, Axis::Y);
    const Grid2D& g = u.grid();
    double measure = 0.0;
    for (int j = 0; j < g.ny(); ++j) {
      for (int i = 0; i < g.nx(); ++i) {
        const double rx = sx.r1(i, j) + sx.r2(i, j) + sx.r1(i + 1, j) + sx.r2(i + 1, j);
        const double ry = sy.r1(i, j) + sy.r2(i, j) + sy.r1(i, j + 1) + sy.r2(i, j + 1);
        measure += std::abs(rx / (2 * g.dx()) + ry / (2 * g.dy())) * g.dx() * g.dy();
      }
    }
    const ResidualConstants c = residual_constants(kr, f, 1.0, bounds.d_high);
    const EntropyResidual r = entropy_residual(kr, c, u, e.jumps, e.fluxes);
    CHECK(r.residual_measure == doctest::Approx(measure).epsilon(1e-12));
    CHECK(r.residual_measure <= r.bound_rhs);
  }
  SUBCASE("constant field has no residual") {
    GridFunction c(u.grid());
    for (double& v : c.values()) v = 0.3;
    const Eval ec = evaluate(c, f, bounds);
    const EntropyPair kr = smoothed_kruzkov_pair(f, 0.0, 1e-2);
    const EntropyResidual r = entropy_residual(kr, residual_constants(kr, f, 1.0, 1.0), c, ec.jumps, ec.fluxes);
    CHECK(r.residual_measure <= 1e-15);
    CHECK(r.bound_rhs == 0.0);
  }
}

TEST_CASE("residual constants") {
  const FluxSpec f = burgers_flux();
  const ResidualConstants sq = residual_constants(square_entropy_pair(f), f, 1.0, 2.0);
  // r1 is rounding only; divided by the smallest sampled |[[u]]|^3 = 1e-9.
  CHECK(sq.c1 <= 1e-6);
  CHECK(sq.c2 == 2.0);
  const double delta = 1e-2;
  const EntropyPair kr = smoothed_kruzkov_pair(f, 0.5, delta);
  const ResidualConstants c = residual_constants(kr, f, 1.0, 1.0);
  CHECK(c.c2 == doctest::Approx(1.0 / delta).epsilon(1e-12));
  // The sampled constant bounds |r1| <= C1 |[[u]]|^3 off the sample lattice too.
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int t = 0; t < 20000; ++t) {
    const double a = d(rng), b = d(rng);
    if (a == b) continue;
    const double r1 = (kr.deta(b) - kr.deta(a)) * entropy_conservative_flux(a, b, f.x) - (kr.psi_x(b) - kr.psi_x(a));
    CHECK(std::abs(r1) <= c.c1 * std::pow(std::abs(b - a), 3) + 1e-14);
  }
  CHECK_THROWS(residual_constants(kr, f, 0.0, 1.0));
}

TEST_CASE("entropy rate identity holds on both boundary types") {
  std::mt19937_64 rng(12);
  const FluxSpec f = burgers_flux();
  const EntropyPair sq = square_entropy_pair(f);
  for (Boundary bc : {Boundary::Periodic, Boundary::Outflow}) {
    for (int t = 0; t < 50; ++t) {
      const GridFunction u = random_field(Grid2D(9, 6, 0.1, 0.15, 0, 0, bc), rng);
      const RhsEvaluation e = evaluate_rhs(u, f, {1e-3, 1.0});
      const EntropyRateIdentity id = entropy_rate_identity(sq, u, e.rate, e.jumps, e.fluxes);
      CHECK(std::abs(id.lhs - id.rhs) <= 1e-13);
      CHECK(id.rhs <= 0.0);
    }
  }
}

TEST_CASE("weak-BV report") {
  SolverConfig cfg;
  cfg.bounds = {1e-3, 1.0};
  cfg.t_end = 0.3;
  SUBCASE("zero data") {
    InitialValueProblem p{Grid2D::covering(0, 1, 0, 1, 8, 8, Boundary::Periodic), burgers_flux(),
                          [](double, double) { return 0.0; }};
    const WeakBvReport r = weak_bv_report(run(cfg, p).ledger(), 1.0);
    CHECK(r.cube_total == 0.0);
    CHECK(r.pair_total == 0.0);
    CHECK(r.holds);
  }
  SUBCASE("Burgers totals across resolutions") {
    for (int n : {16, 32, 64}) {
      InitialValueProblem p{Grid2D::covering(0, 1, 0, 1, n, n, Boundary::Periodic), burgers_flux(),
                            [](double x, double y) { return 0.5 + 0.4 * std::sin(kTwoPi * (x + y)); }};
      const RunResult run_r = run(cfg, p);
      const WeakBvReport r = weak_bv_report(run_r.ledger(), 1.0);
      const double half_l2 = run_r.ledger().rows.front().total_entropy;
      CHECK(r.pair_total <= half_l2 / cfg.bounds.d_low);
      CHECK(r.holds);
      CHECK(r.ratio_to_bound <= 1.0);
    }
  }
}

TEST_CASE("l1_error examples") {
  const Grid2D g = Grid2D::covering(0, 1, 0, 1, 16, 16, Boundary::Periodic);
  auto s = [](double x, double y) { return std::sin(kTwoPi * x) * std::sin(kTwoPi * y); };
  const GridFunction u = project_initial_data(g, s);
  CHECK(l1_error(u, s) == 0.0);
  GridFunction one(g);
  for (double& v : one.values()) v = 1.0;
  CHECK(l1_error(one, [](double, double) { return 0.0; }) == doctest::Approx(1.0).epsilon(1e-15));
  // Staggered evaluation: midpoint samples against Gauss averages differ only
  // by the O(h^2) quadrature gap.
  GridFunction mid(g);
  for (int j = 0; j < 16; ++j)
    for (int i = 0; i < 16; ++i) mid(i, j) = s(g.cell_x(i), g.cell_y(j));
  const double h = 1.0 / 16;
  CHECK(l1_error(mid, s) <= std::pow(kTwoPi * h, 2) / 12.0);
}

TEST_CASE("observed_order examples") {
  CHECK(*observed_order(0.1, 0.025, 2.0) == doctest::Approx(2.0));
  CHECK(*observed_order(0.1, 0.1, 2.0) == 0.0);
  CHECK(*observed_order(0.1, 0.05, 2.0) == doctest::Approx(1.0));
  CHECK_FALSE(observed_order(0.0, 0.05, 2.0));
  CHECK_FALSE(observed_order(0.1, -1.0, 2.0));
  CHECK_FALSE(observed_order(0.1, 0.05, 1.0));
}

TEST_CASE("mass and entropy totals") {
  const Grid2D g(4, 5, 0.5, 0.2, 0, 0, Boundary::Periodic);
  GridFunction u(g);
  for (double& v : u.values()) v = 2.0;
  CHECK(total_mass(u) == doctest::Approx(4.0));
  CHECK(total_square_entropy(u) == doctest::Approx(4.0));
}
