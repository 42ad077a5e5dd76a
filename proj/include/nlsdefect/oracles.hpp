#pragma once

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "nlsdefect/delta_family.hpp"
#include "nlsdefect/dprime_family.hpp"
#include "nlsdefect/observables.hpp"
#include "nlsdefect/profiles.hpp"

namespace nlsdefect {

using DefectModel = std::variant<DeltaModel, DPrimeModel>;

/// Observables measured by quadrature only: L2 mass, kinetic + defect +
/// quartic energy, and the action E + (omega/2) rho. Independent of the
/// families' closed forms.
Observables quadrature_observables(const PiecewiseSechState& state,
                                   const DefectModel& model);

/// Pointwise defect-equation diagnostics of a candidate stationary state.
struct ResidualReport {
  double stationary_max = 0.0;       // max over grid of |-psi'' - l psi^3 + w psi|
  double continuity_or_jump = 0.0;   // delta: |psi(0+)-psi(0-)|; delta': |psi'(0+)-psi'(0-)|
  double derivative_condition = 0.0; // the defect matching condition residual
  double nehari = 0.0;               // 2 S - (lambda/2) |psi|_4^4, signed
};

/// 4001 uniform points on [-15, 15] minus a 1e-6 band around the origin.
std::vector<double> default_residual_grid();

ResidualReport residuals(const PiecewiseSechState& state,
                         const DefectModel& model, double omega,
                         std::span<const double> grid);

enum class TSystem { Plus, Minus };

/// All roots of the matching system in [0,1]^2, found by a 400x400 sign scan
/// of the two residual surfaces plus damped Newton polish. Swapped pairs of
/// the changing-sign system are reported separately; the empty list is a
/// valid answer.
std::vector<std::pair<double, double>> brute_force_t_systems(TSystem kind,
                                                             double gamma,
                                                             double omega);

}  // namespace nlsdefect
