#include "tecno/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <cmath>
#include <random>
#include <sstream>

#include "tecno/entropy.hpp"
#include "tecno/flux.hpp"
#include "tecno/problems.hpp"
#include "tecno/reconstruct.hpp"
#include "tecno/solver.hpp"

namespace tecno {

namespace {

// Copy-extends the row by one cell on each side, as outflow ghosts do.
SignReport sign_with_copies(const std::vector<double>& row) {
  std::vector<double> padded;
  padded.reserve(row.size() + 2);
  padded.push_back(row.front());
  padded.insert(padded.end(), row.begin(), row.end());
  padded.push_back(row.back());
  return check_sign_property(padded);
}

PropertyResult sign_property(std::mt19937_64& rng) {
  long violations = 0, interfaces = 0;
  double max_ratio = 0.0;
  auto absorb = [&](const SignReport& r) {
    violations += r.violations;
    interfaces += r.interfaces;
    max_ratio = std::max(max_ratio, r.max_ratio);
  };
  std::vector<double> row(6);
  for (int code = 0; code < 729; ++code) {
    for (int n = 0, c = code; n < 6; ++n, c /= 3) row[n] = (c % 3) - 1.0;
    absorb(sign_with_copies(row));
  }
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  for (int trial = 0; trial < 100000; ++trial) {
    for (double& v : row) v = value(rng);
    absorb(sign_with_copies(row));
  }
  std::ostringstream d;
  d << interfaces << " interfaces, " << violations << " violations, max <<w>>/[[w]] = " << max_ratio;
  return {"sign property", violations == 0 && max_ratio <= 2.0, d.str()};
}

PropertyResult entropy_conservation_identity(std::mt19937_64& rng) {
  const FluxSpec fluxes[] = {
      burgers_flux(), linear_flux(1.0, -0.5),
      general_flux("cubic", FluxComponent::general([](double u) { return u * u * u / 3.0; },
                                                   [](double u) { return u * u; }),
                   FluxComponent::general([](double u) { return std::sin(u); },
                                          [](double u) { return std::cos(u); }))};
  std::uniform_real_distribution<double> value(-2.0, 2.0);
  double worst = 0.0;
  long failures = 0;
  for (const FluxSpec& flux : fluxes) {
    const EntropyPair square = square_entropy_pair(flux);
    for (int trial = 0; trial < 10000; ++trial) {
      const double ul = value(rng), ur = value(rng);
      for (Axis axis : {Axis::X, Axis::Y}) {
        const double ft = entropy_conservative_flux(ul, ur, flux.component(axis));
        const auto& psi = square.psi(axis);
        const double defect = std::abs((ur - ul) * ft - (psi(ur) - psi(ul)));
        const double scaled = defect / (1.0 + std::abs(ur - ul));
        worst = std::max(worst, scaled);
        if (scaled > 1e-10) ++failures;
      }
    }
  }
  std::ostringstream d;
  d << "max |[[u]]F~ - [[psi]]| / (1 + |[[u]]|) = " << worst << " over 3 fluxes";
  return {"entropy-conservation identity", failures == 0, d.str()};
}

PropertyResult cube_inequality(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::uniform_int_distribution<int> length(1, 12);
  long violations = 0;
  double worst = 0.0;
  std::vector<double> support;
  for (int trial = 0; trial < 100000; ++trial) {
    support.resize(length(rng));
    for (double& v : support) v = value(rng);
    const CubeReport r = check_cube_inequality(support);
    if (!r.holds()) ++violations;
    if (r.rhs > 0.0) worst = std::max(worst, r.lhs / r.rhs);
  }
  std::ostringstream d;
  d << violations << " violations, max lhs/rhs = " << worst;
  return {"cube inequality", violations == 0, d.str()};
}

PropertyResult entropy_rate_identity_suite() {
  bool ok = true;
  std::ostringstream d;
  for (const char* name : {"burgers-smooth", "burgers-riemann-x"}) {
    const ProblemSpec p = make_problem(name);
    SolverConfig cfg;
    cfg.t_end = 0.1;
    cfg.bounds = {1e-3, 1.0};
    cfg.linf_bound = p.linf_bound;
    const RunResult r = run(cfg, p.initial_value_problem(32, 32));
    const EntropyLedger& l = r.ledger();
    const bool good = !r.failure && l.max_rate_defect <= 1e-10 && l.max_dissipation_rhs <= 0.0;
    ok = ok && good;
    d << name << ": " << l.rhs_evaluations << " evaluations, max defect " << l.max_rate_defect
      << ", max rhs " << l.max_dissipation_rhs << "; ";
  }
  return {"entropy-rate identity", ok, d.str()};
}

}  // namespace

std::vector<PropertyResult> run_property_suites(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::function<PropertyResult()> suites[] = {
      [&] { return sign_property(rng); },
      [&] { return entropy_conservation_identity(rng); },
      [&] { return cube_inequality(rng); },
      [] { return entropy_rate_identity_suite(); },
  };
  std::vector<PropertyResult> out;
  for (const auto& suite : suites) {
    const auto start = std::chrono::steady_clock::now();
    PropertyResult r = suite();
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    std::ostringstream d;
    d.precision(2);
    d << " (" << std::fixed << took.count() << " s)";
    r.detail += d.str();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tecno
