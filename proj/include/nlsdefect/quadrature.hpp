#pragma once

#include <functional>
#include <span>

namespace nlsdefect {

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-13;
  int max_intervals = 20000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (15-point) integration of f over [a, b].
/// `breakpoints` seeds the initial subdivision with known features of the
/// integrand (peaks, the origin); points outside (a, b) are ignored.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           std::span<const double> breakpoints = {},
                           const QuadratureOptions& opts = {});

/// integrate() that throws ToleranceError when the error estimate stalls
/// above max(1e-10, 100 * rel_tol * |value|).
double integrate_checked(const Integrand& f, double a, double b,
                         std::span<const double> breakpoints = {},
                         const QuadratureOptions& opts = {});

}  // namespace nlsdefect
