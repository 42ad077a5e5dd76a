#pragma once

namespace nlsdefect {

/// Frequency, squared L2 norm, energy and action of a stationary state.
struct Observables {
  double omega = 0.0;
  double mass = 0.0;    // rho = |psi|_2^2
  double energy = 0.0;  // E
  double action = 0.0;  // S_omega = E + (omega/2) * rho
};

}  // namespace nlsdefect
