#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "tecno/error.hpp"
#include "tecno/problems.hpp"

using namespace tecno;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Characteristic solve by plain bisection, independent of the registry's Newton.
double burgers_smooth_by_bisection(double x, double y, double t) {
  auto u0 = [](double xi) { return 0.5 + 0.4 * std::sin(kTwoPi * xi); };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (mid - u0(x + y - 2.0 * t * mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("registry contents") {
  std::set<std::string> names;
  for (const ProblemSpec& p : registry()) {
    names.insert(p.name);
    CHECK_FALSE(p.description.empty());
    CHECK(static_cast<bool>(p.exact));
  }
  CHECK(names == std::set<std::string>{"advect-smooth", "burgers-smooth", "burgers-riemann-x"});
  CHECK(make_problem("advect-smooth").boundary == Boundary::Periodic);
  CHECK(make_problem("burgers-riemann-x").boundary == Boundary::Outflow);
  CHECK_THROWS_AS(make_problem("kelvin-helmholtz"), ConfigError);
}

TEST_CASE("parameters are checked per problem") {
  ProblemParameters p;
  p.u_left = 2.0;
  CHECK_THROWS_AS(make_problem("advect-smooth", p), ConfigError);
  CHECK_THROWS_AS(make_problem("burgers-smooth", p), ConfigError);
  CHECK(make_problem("burgers-riemann-x", p).linf_bound == 2.0);
  ProblemParameters q;
  q.a = 1.0;
  CHECK_THROWS_AS(make_problem("burgers-riemann-x", q), ConfigError);
  ProblemParameters f;
  f.flux = "linear(0.5,-2)";
  const ProblemSpec adv = make_problem("advect-smooth", f);
  CHECK(adv.flux.x.value(1.0) == 0.5);
  CHECK(adv.flux.y.value(1.0) == -2.0);
  f.flux = "burgers";
  CHECK_THROWS_AS(make_problem("advect-smooth", f), ConfigError);
  CHECK_NOTHROW(make_problem("burgers-smooth", f));
  f.a = 3.0;
  f.flux = "linear(1,1)";
  CHECK_THROWS_AS(make_problem("advect-smooth", f), ConfigError);
}

TEST_CASE("advect-smooth oracle after one period equals the initial data") {
  const ProblemSpec p = make_problem("advect-smooth");
  for (double x : {0.1, 0.37, 0.8})
    for (double y : {0.05, 0.5, 0.93}) CHECK(p.exact(x, y, 1.0) == doctest::Approx(p.u0(x, y)).epsilon(1e-12).scale(1));
  ProblemParameters q;
  q.a = 0.5;
  q.b = -0.25;
  const ProblemSpec r = make_problem("advect-smooth", q);
  CHECK(r.exact(0.3, 0.6, 0.4) == doctest::Approx(r.u0(0.1, 0.7)).epsilon(1e-12));
}

TEST_CASE("burgers-riemann-x oracles") {
  SUBCASE("shock") {
    const ProblemSpec p = make_problem("burgers-riemann-x");
    const double t = 0.3, s = 0.5 + t / 2;
    CHECK(p.exact(s - 1e-9, 0.2, t) == 1.0);
    CHECK(p.exact(s + 1e-9, 0.7, t) == 0.0);
    CHECK(p.exact(0.1, 0.5, 0.0) == 1.0);
    CHECK(p.exact(0.5, 0.5, 0.0) == 0.0);
  }
  SUBCASE("transonic rarefaction") {
    ProblemParameters q;
    q.u_left = -1.0;
    q.u_right = 1.0;
    const ProblemSpec p = make_problem("burgers-riemann-x", q);
    const double t = 0.25;
    for (double x : {0.0, 0.2, 0.3, 0.45, 0.5, 0.6, 0.74, 0.76, 1.0}) {
      CHECK(p.exact(x, 0.3, t) == doctest::Approx(std::clamp((x - 0.5) / t, -1.0, 1.0)));
    }
  }
}

TEST_CASE("burgers-smooth oracle") {
  const ProblemSpec p = make_problem("burgers-smooth");
  CHECK(p.oracle_horizon == doctest::Approx(1.0 / (1.6 * std::numbers::pi)));
  for (double t : {0.0, 0.05, 0.1, 0.19}) {
    for (double x : {0.0, 0.13, 0.5, 0.77}) {
      for (double y : {0.2, 0.61}) {
        const double u = p.exact(x, y, t);
        CHECK(u == doctest::Approx(burgers_smooth_by_bisection(x, y, t)).epsilon(1e-13));
        // Residual of the implicit characteristic relation.
        CHECK(std::abs(u - p.u0(x + y - 2 * t * u, 0.0)) <= 1e-14);
      }
    }
  }
  CHECK(p.has_oracle_at(0.1));
  CHECK_FALSE(p.has_oracle_at(0.25));
  CHECK_THROWS_AS(p.exact_at(0.25), ConfigError);
}

TEST_CASE("every oracle projected against itself at t = 0 has zero error") {
  for (const ProblemSpec& p : registry()) {
    const Grid2D g = p.grid(12, 10);
    const GridFunction u = project_initial_data(g, p.exact_at(0.0));
    CHECK(l1_error(u, p.exact_at(0.0)) == 0.0);
    CHECK(l1_error(project_initial_data(g, p.u0), p.exact_at(0.0)) == 0.0);
  }
}
