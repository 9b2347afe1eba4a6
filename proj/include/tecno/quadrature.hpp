#pragma once

#include <functional>

namespace tecno {

/// Adaptive 15-point Gauss-Kronrod integral of f over [a, b] (either order).
double integrate(const std::function<double(double)>& f, double a, double b);

}  // namespace tecno
