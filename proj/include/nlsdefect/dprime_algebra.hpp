#pragma once

#include <variant>

namespace nlsdefect {

/// Solution of the non-changing-sign matching system
///   t1^2 - t1^4 = t2^2 - t2^4,   1/t1 - 1/t2 = gamma sqrt(omega),
/// with 0 <= t1 <= t2 <= 1 and t1^2 + t2^2 = 1.
struct TPlusSolution {
  double t1;
  double t2;
};

struct TMinusNone {};

struct TMinusSymmetric {
  double t_sym;  // t1 = t2 = 2/(gamma sqrt(omega))
};

struct TMinusFull {
  double t_sym;
  double t1;  // t1 >= t2, t1^2 + t2^2 = 1
  double t2;
};

/// Classification of the changing-sign matching system
///   t1^2 - t1^4 = t2^2 - t2^4,   1/t1 + 1/t2 = gamma sqrt(omega):
/// no solutions up to omega = 4/gamma^2, the symmetric root up to 8/gamma^2,
/// and additionally the asymmetric pair above that.
using TMinusSolutions = std::variant<TMinusNone, TMinusSymmetric, TMinusFull>;

TPlusSolution solve_t_plus(double gamma, double omega);

TMinusSolutions solve_t_minus(double gamma, double omega);

}  // namespace nlsdefect
