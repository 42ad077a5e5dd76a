#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlsdefect/observables.hpp"
#include "nlsdefect/profiles.hpp"

namespace nlsdefect {

/// Attractive delta-prime defect of strength gamma with cubic coupling lambda.
/// Boundary conditions at the origin: psi' continuous and
/// psi(0+) - psi(0-) = -gamma psi'(0+).
struct DPrimeModel {
  double gamma;
  double lambda;
  DPrimeModel(double gamma_, double lambda_);
};

enum class Family { Sym, AsymPlus, Antisym, AsymMinus };
enum class Branch { Plus, Minus };

/// Which of the four delta-prime families a state belongs to; the branch
/// selects one of the two mirror-image members for the asymmetric families.
struct FamilyTag {
  Family family = Family::Sym;
  Branch branch = Branch::Plus;

  bool has_branch() const {
    return family == Family::AsymPlus || family == Family::AsymMinus;
  }
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

std::string family_name(Family f);
std::string branch_name(Branch b);

/// Existence thresholds in omega: AsymPlus and Sym exist for every omega > 0,
/// Antisym above 4/gamma^2, AsymMinus above 8/gamma^2 (strict).
bool family_exists(FamilyTag tag, double gamma, double omega);

/// Constructs the stationary state of one family at frequency omega.
/// Throws ThresholdError when the family does not exist there.
PiecewiseSechState dprime_state(FamilyTag tag, double gamma, double lambda,
                                double omega);

/// All stationary states at (gamma, lambda, omega), ordered Sym,
/// AsymPlus(+/-), Antisym, AsymMinus(+/-); the list has 3, 4 or 6 entries
/// depending on the thresholds.
std::vector<std::pair<FamilyTag, PiecewiseSechState>> enumerate_states(
    double gamma, double lambda, double omega);

/// Closed-form mass/energy/action of a family at frequency omega. The
/// AsymMinus action uses the form consistent with S = E + (omega/2) rho,
///   S = (4/(3l)) w^{3/2} - (2/(3l g^3)) (g^2 w + 1)^{3/2} - w/(l g)
///       - 2/(3l g^3),
/// whose middle sign differs from the non-changing-sign family.
Observables dprime_observables(FamilyTag tag, double gamma, double lambda,
                               double omega);

/// Smallest mass carried by the AsymMinus family: 8(sqrt(2)-1)/(gamma lambda).
double asym_minus_mass_threshold(double gamma, double lambda);

/// Inverts the mass map of one family. Works for every rho > 0 except
/// AsymMinus, which requires rho above its mass threshold.
double dprime_omega_from_mass(FamilyTag tag, double gamma, double lambda,
                              double rho);

/// Energy of a family at fixed mass, E(omega(rho)).
double dprime_energy_at_mass(FamilyTag tag, double gamma, double lambda,
                             double rho);

/// Action gaps driving the two symmetry-breaking bifurcations:
/// gap_plus = S(AsymPlus) - S(Sym) for every omega > 0, and
/// gap_minus = S(Antisym) - S(AsymMinus) for omega > 8/gamma^2.
struct ActionGaps {
  double gap_plus = 0.0;
  std::optional<double> gap_minus;
};

ActionGaps action_gaps(double gamma, double lambda, double omega);

/// Families ordered by energy at fixed mass, ascending. AsymMinus is
/// included only above its mass threshold, where it is the strict minimum.
std::vector<std::pair<FamilyTag, double>> fixed_mass_energy_ranking(
    double gamma, double lambda, double rho);

enum class DPrimeLimit {
  Linear,          // lambda -> 0+ at fixed mass
  GammaToZero,     // gamma -> 0+ at fixed mass
  GammaToInfinity  // gamma -> +inf at fixed mass
};

/// Limit shape of a family under one of the three limits, at fixed mass rho.
/// Throws UndefinedLimitError for pairs without a defined target (e.g. the
/// AsymMinus linear limit, whose mass threshold blows up as lambda -> 0).
ClosedFormTarget dprime_limit_target(FamilyTag tag, double gamma,
                                     double lambda, double rho,
                                     DPrimeLimit which);

}  // namespace nlsdefect
