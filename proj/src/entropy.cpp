#include "tecno/entropy.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "tecno/error.hpp"
#include "tecno/quadrature.hpp"

namespace tecno {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;

// Boost's adaptive driver compares an error estimate left on the reference
// interval [-1, 1] with a tolerance on [a, b], so narrow intervals recurse to
// the depth limit; it also never converges on integrals that cancel to ~0.
// Here the error is rescaled and a panel is also accepted below a floor tied
// to the integral of |f|.
double adapt(const std::function<double(double)>& f, double a, double b, int depth, double floor) {
  double err = 0.0, l1 = 0.0;
  const double est = Rule::integrate(f, a, b, 0, 0.0, &err, &l1);
  err *= 0.5 * (b - a);
  if (depth == 0 || err <= std::max(1e-13 * std::abs(est), floor)) return est;
  const double mid = 0.5 * (a + b);
  return adapt(f, a, mid, depth - 1, 0.5 * floor) + adapt(f, mid, b, depth - 1, 0.5 * floor);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b) {
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a);
  double err = 0.0, l1 = 0.0;
  Rule::integrate(f, a, b, 0, 0.0, &err, &l1);
  return adapt(f, a, b, 20, 1e-14 * l1);
}

FluxComponent FluxComponent::quadratic(Quadratic coefficients) {
  FluxComponent c;
  c.poly_ = coefficients;
  return c;
}

FluxComponent FluxComponent::general(ScalarFunction f, ScalarFunction df,
                                     ScalarFunction primitive) {
  if (!f || !df) throw std::invalid_argument("FluxComponent: flux and derivative are required");
  FluxComponent c;
  c.f_ = std::move(f);
  c.df_ = std::move(df);
  c.primitive_ = std::move(primitive);
  return c;
}

double FluxComponent::primitive(double u) const {
  if (poly_) return u * (poly_->c0 + u * (poly_->c1 / 2.0 + u * poly_->c2 / 3.0));
  if (primitive_) return primitive_(u);
  return integrate(f_, 0.0, u);
}

double FluxComponent::mean_value(double a, double b) const {
  if (poly_) {
    // (Psi(b) - Psi(a)) / (b - a) expanded symmetrically in a and b.
    return poly_->c0 + poly_->c1 * (0.5 * (a + b)) + poly_->c2 * ((a * a + b * b) + a * b) / 3.0;
  }
  return integrate(f_, std::min(a, b), std::max(a, b)) / std::abs(b - a);
}

FluxSpec linear_flux(double a, double b) {
  FluxSpec spec;
  std::ostringstream name;
  name << "linear(" << a << "," << b << ")";
  spec.name = name.str();
  spec.x = FluxComponent::quadratic({0.0, a, 0.0});
  spec.y = FluxComponent::quadratic({0.0, b, 0.0});
  return spec;
}

FluxSpec burgers_flux() {
  FluxSpec spec;
  spec.name = "burgers";
  spec.x = FluxComponent::quadratic({0.0, 0.0, 0.5});
  spec.y = FluxComponent::quadratic({0.0, 0.0, 0.5});
  return spec;
}

FluxSpec general_flux(std::string name, FluxComponent x, FluxComponent y) {
  return FluxSpec{std::move(name), std::move(x), std::move(y)};
}

FluxSpec flux_from_name(std::string_view name) {
  const std::string s(name);
  if (s == "burgers") return burgers_flux();
  static const std::regex linear(
      R"(^\s*linear\s*\(\s*([-+0-9.eE]+)\s*,\s*([-+0-9.eE]+)\s*\)\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, linear)) {
    try {
      std::size_t pa = 0, pb = 0;
      const double a = std::stod(m[1].str(), &pa);
      const double b = std::stod(m[2].str(), &pb);
      if (pa == m[1].str().size() && pb == m[2].str().size() && std::isfinite(a) && std::isfinite(b)) {
        FluxSpec spec = linear_flux(a, b);
        spec.name = s;
        return spec;
      }
    } catch (const std::exception&) {
    }
  }
  throw ConfigError("unknown flux '" + s + "' (expected \"burgers\" or \"linear(a,b)\")");
}

namespace {

// Entropy flux of the square entropy: integral_0^u s f'(s) ds.
ScalarFunction square_entropy_flux(const FluxComponent& c) {
  if (const auto& p = c.coefficients()) {
    const Quadratic q = *p;
    return [q](double u) { return u * u * (q.c1 / 2.0 + 2.0 * q.c2 * u / 3.0); };
  }
  return [c](double u) { return integrate([&c](double s) { return s * c.derivative(s); }, 0.0, u); };
}

}  // namespace

EntropyPair square_entropy_pair(const FluxSpec& flux) {
  EntropyPair pair;
  pair.name = "square";
  pair.eta = [](double u) { return 0.5 * u * u; };
  pair.deta = [](double u) { return u; };
  pair.ddeta = [](double) { return 1.0; };
  pair.q_x = square_entropy_flux(flux.x);
  pair.q_y = square_entropy_flux(flux.y);
  pair.psi_x = [c = flux.x, q = pair.q_x](double u) { return u * c.value(u) - q(u); };
  pair.psi_y = [c = flux.y, q = pair.q_y](double u) { return u * c.value(u) - q(u); };
  return pair;
}

EntropyPair smoothed_kruzkov_pair(const FluxSpec& flux, double k, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("smoothed_kruzkov_pair: delta must be positive");
  }
  if (!std::isfinite(k)) throw std::invalid_argument("smoothed_kruzkov_pair: k must be finite");

  EntropyPair pair;
  std::ostringstream name;
  name << "kruzkov(k=" << k << ",delta=" << delta << ")";
  pair.name = name.str();
  const double d2 = delta * delta;
  pair.eta = [k, delta, d2](double u) { return std::sqrt((u - k) * (u - k) + d2) - delta; };
  pair.deta = [k, d2](double u) { return (u - k) / std::sqrt((u - k) * (u - k) + d2); };
  pair.ddeta = [k, d2](double u) {
    const double r2 = (u - k) * (u - k) + d2;
    return d2 / (r2 * std::sqrt(r2));
  };

  auto make_q = [&](const FluxComponent& c) -> ScalarFunction {
    if (const auto& p = c.coefficients()) {
      // integral_k^u eta'(s) (c1 + 2 c2 s) ds
      //   = c1 eta(u) + 2 c2 (u eta(u) - integral_0^{u-k} eta),
      // with integral_0^T eta = (T R + delta^2 asinh(T/delta))/2 - delta T.
      const Quadratic q = *p;
      return [q, k, delta, d2](double u) {
        const double t = u - k;
        const double r = std::sqrt(t * t + d2);
        const double eta = r - delta;
        const double eta_integral = 0.5 * (t * r + d2 * std::asinh(t / delta)) - delta * t;
        return q.c1 * eta + 2.0 * q.c2 * (u * eta - eta_integral);
      };
    }
    return [c, deta = pair.deta, k](double u) {
      return integrate([&](double s) { return deta(s) * c.derivative(s); }, k, u);
    };
  };
  pair.q_x = make_q(flux.x);
  pair.q_y = make_q(flux.y);
  pair.psi_x = [c = flux.x, deta = pair.deta, q = pair.q_x](double u) {
    return deta(u) * c.value(u) - q(u);
  };
  pair.psi_y = [c = flux.y, deta = pair.deta, q = pair.q_y](double u) {
    return deta(u) * c.value(u) - q(u);
  };
  return pair;
}

GridFunction entropy_variable(const EntropyPair& pair, const GridFunction& w) {
  GridFunction v(w.grid(), w.time());
  auto in = w.values();
  auto out = v.values();
  for (std::size_t n = 0; n < in.size(); ++n) out[n] = pair.deta(in[n]);
  v.require_finite("entropy_variable");
  return v;
}

}  // namespace tecno
