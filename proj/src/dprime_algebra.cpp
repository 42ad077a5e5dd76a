#include "nlsdefect/dprime_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace nlsdefect {
namespace {

void require_positive(double gamma, double omega) {
  if (!(gamma > 0.0) || !(omega > 0.0))
    throw std::invalid_argument("gamma and omega must be positive");
}

}  // namespace

TPlusSolution solve_t_plus(double gamma, double omega) {
  require_positive(gamma, omega);
  // Everything depends on u = gamma^2 omega only. With s = sqrt(1+u) the
  // textbook radicand u - 2 + 2s factors as (s-1)(s+3) and s-1 = u/(s+1),
  // which removes the cancellation near u = 0.
  const double u = (gamma * gamma) * omega;
  const double s = std::sqrt(1.0 + u);
  const double root = std::sqrt((s + 3.0) / (s + 1.0));
  const double shift = std::sqrt(u) / (s + 1.0);
  return {0.5 * (root - shift), 0.5 * (root + shift)};
}

TMinusSolutions solve_t_minus(double gamma, double omega) {
  require_positive(gamma, omega);
  const double u = (gamma * gamma) * omega;
  if (!(u > 4.0)) return TMinusNone{};
  const double t_sym = 2.0 / std::sqrt(u);
  if (!(u > 8.0)) return TMinusSymmetric{t_sym};
  // Radicand u - 2 - 2s factors as (s-3)(s+1) with s-3 = (u-8)/(s+3).
  const double s = std::sqrt(1.0 + u);
  const double excess = std::max(0.0, u - 8.0);
  const double root = std::sqrt(excess * (s + 1.0) / (s + 3.0));
  const double base = (1.0 + s) / (2.0 * std::sqrt(u));
  const double half_root = root / (2.0 * std::sqrt(u));
  return TMinusFull{t_sym, base + half_root, base - half_root};
}

}  // namespace nlsdefect
