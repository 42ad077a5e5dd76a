#pragma once

#include "nlsdefect/observables.hpp"
#include "nlsdefect/profiles.hpp"

namespace nlsdefect {

/// Attractive Dirac-delta defect of strength alpha with cubic coupling lambda.
/// Boundary condition at the origin: psi'(0+) - psi'(0-) = -alpha psi(0).
struct DeltaModel {
  double alpha;
  double lambda;
  DeltaModel(double alpha_, double lambda_);
};

/// Half-width offset xbar of the |x| fold; negative on the whole existence
/// window omega > alpha^2/4.
double delta_center_x(const DeltaModel& model, double omega);

/// The unique stationary branch sqrt(2w/l) sech(sqrt(w) (|x| - xbar)).
/// Throws ThresholdError for omega <= alpha^2/4.
PiecewiseSechState delta_state(const DeltaModel& model, double omega);

/// Closed forms: rho = 4 sqrt(w)/l - 2a/l, E = -(2/3) w^{3/2}/l + a^3/(12 l),
/// S = (4/3) w^{3/2}/l - a w/l + a^3/(12 l).
Observables delta_observables(const DeltaModel& model, double omega);

/// Mass parametrization sqrt(w) = l rho/4 + a/2 (valid for every rho > 0).
double delta_omega_from_mass(const DeltaModel& model, double rho);

PiecewiseSechState delta_state_by_mass(const DeltaModel& model, double rho);

enum class DeltaLimit {
  Linear,   // lambda -> 0+ at fixed mass: exponential cusp of the linear problem
  NoDefect  // alpha -> 0+ at fixed mass: the free soliton
};

ClosedFormTarget delta_limit_target(const DeltaModel& model, double rho,
                                    DeltaLimit which);

}  // namespace nlsdefect
