#include "nlsdefect/delta_family.hpp"

#include <cmath>
#include <stdexcept>

#include "nlsdefect/errors.hpp"

namespace nlsdefect {

DeltaModel::DeltaModel(double alpha_, double lambda_)
    : alpha(alpha_), lambda(lambda_) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
}

namespace {

void require_above_threshold(const DeltaModel& model, double omega) {
  if (!(omega > 0.25 * model.alpha * model.alpha))
    throw ThresholdError("delta branch requires omega > alpha^2/4");
}

}  // namespace

double delta_center_x(const DeltaModel& model, double omega) {
  require_above_threshold(model, omega);
  const double w = std::sqrt(omega);
  return 0.5 / w * std::log((2.0 * w - model.alpha) / (2.0 * w + model.alpha));
}

PiecewiseSechState delta_state(const DeltaModel& model, double omega) {
  const double xbar = delta_center_x(model, omega);
  // psi = A sech(sqrt(w)(|x| - xbar)): the left piece is the mirror image.
  return PiecewiseSechState::from_centers(omega, model.lambda, +1, -xbar, +1,
                                          xbar);
}

Observables delta_observables(const DeltaModel& model, double omega) {
  require_above_threshold(model, omega);
  const double a = model.alpha;
  const double l = model.lambda;
  const double w32 = omega * std::sqrt(omega);
  Observables obs;
  obs.omega = omega;
  obs.mass = 4.0 * std::sqrt(omega) / l - 2.0 * a / l;
  obs.energy = -2.0 / 3.0 * w32 / l + a * a * a / (12.0 * l);
  obs.action = 4.0 / 3.0 * w32 / l - a * omega / l + a * a * a / (12.0 * l);
  return obs;
}

double delta_omega_from_mass(const DeltaModel& model, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  const double sw = model.lambda * rho / 4.0 + model.alpha / 2.0;
  return sw * sw;
}

PiecewiseSechState delta_state_by_mass(const DeltaModel& model, double rho) {
  return delta_state(model, delta_omega_from_mass(model, rho));
}

ClosedFormTarget delta_limit_target(const DeltaModel& model, double rho,
                                    DeltaLimit which) {
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  if (which == DeltaLimit::Linear) {
    // Bound state of the linear delta Hamiltonian with mass rho.
    return ClosedFormTarget::exp_cusp(std::sqrt(0.5 * rho * model.alpha),
                                      0.5 * model.alpha, +1, +1,
                                      ClosedFormTarget::Notion::Strong);
  }
  // Free soliton at sqrt(w) = lambda rho / 4.
  const double b = model.lambda * rho / 4.0;
  const double a = std::sqrt(model.lambda) * rho / (2.0 * std::sqrt(2.0));
  return ClosedFormTarget::soliton(a, b, 0.0, +1, +1,
                                   ClosedFormTarget::Notion::Strong);
}

}  // namespace nlsdefect
