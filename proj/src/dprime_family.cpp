#include "nlsdefect/dprime_family.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlsdefect/dprime_algebra.hpp"
#include "nlsdefect/errors.hpp"

namespace nlsdefect {

DPrimeModel::DPrimeModel(double gamma_, double lambda_)
    : gamma(gamma_), lambda(lambda_) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Sym:
      return "sym";
    case Family::AsymPlus:
      return "asym-plus";
    case Family::Antisym:
      return "antisym";
    case Family::AsymMinus:
      return "asym-minus";
  }
  return "?";
}

std::string branch_name(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

namespace {

void require_positive(double gamma, double lambda, double omega) {
  if (!(gamma > 0.0) || !(lambda > 0.0) || !(omega > 0.0))
    throw std::invalid_argument("gamma, lambda, omega must be positive");
}

void require_exists(FamilyTag tag, double gamma, double omega) {
  if (!family_exists(tag, gamma, omega))
    throw ThresholdError(family_name(tag.family) +
                         " does not exist at this omega");
}

}  // namespace

bool family_exists(FamilyTag tag, double gamma, double omega) {
  const double u = (gamma * gamma) * omega;
  switch (tag.family) {
    case Family::Sym:
    case Family::AsymPlus:
      return omega > 0.0;
    case Family::Antisym:
      return u > 4.0;
    case Family::AsymMinus:
      return u > 8.0;
  }
  return false;
}

PiecewiseSechState dprime_state(FamilyTag tag, double gamma, double lambda,
                                double omega) {
  require_positive(gamma, lambda, omega);
  require_exists(tag, gamma, omega);
  const double sw = std::sqrt(omega);

  switch (tag.family) {
    case Family::Sym:
      return PiecewiseSechState::from_centers(omega, lambda, +1, 0.0, +1, 0.0);

    case Family::AsymPlus: {
      const TPlusSolution t = solve_t_plus(gamma, omega);
      const double x1 = std::atanh(t.t1) / sw;
      const double x2 = std::atanh(t.t2) / sw;
      if (tag.branch == Branch::Plus)
        return PiecewiseSechState::from_centers(omega, lambda, +1, x1, +1, x2);
      return PiecewiseSechState::from_centers(omega, lambda, +1, -x2, +1, -x1);
    }

    case Family::Antisym: {
      const double t_sym = 2.0 / (gamma * sw);
      const double xbar = std::atanh(t_sym) / sw;
      return PiecewiseSechState::from_centers(omega, lambda, -1, xbar, +1,
                                              -xbar);
    }

    case Family::AsymMinus: {
      const auto sol = solve_t_minus(gamma, omega);
      const TMinusFull& full = std::get<TMinusFull>(sol);
      const double x1 = std::atanh(full.t1) / sw;
      const double x2 = std::atanh(full.t2) / sw;
      if (tag.branch == Branch::Plus)
        return PiecewiseSechState::from_centers(omega, lambda, +1, x1, -1, -x2);
      return PiecewiseSechState::from_centers(omega, lambda, +1, x2, -1, -x1);
    }
  }
  throw std::logic_error("unreachable family");
}

std::vector<std::pair<FamilyTag, PiecewiseSechState>> enumerate_states(
    double gamma, double lambda, double omega) {
  require_positive(gamma, lambda, omega);
  std::vector<std::pair<FamilyTag, PiecewiseSechState>> out;
  auto add = [&](FamilyTag tag) {
    if (family_exists(tag, gamma, omega))
      out.emplace_back(tag, dprime_state(tag, gamma, lambda, omega));
  };
  add({Family::Sym, Branch::Plus});
  add({Family::AsymPlus, Branch::Plus});
  add({Family::AsymPlus, Branch::Minus});
  add({Family::Antisym, Branch::Plus});
  add({Family::AsymMinus, Branch::Plus});
  add({Family::AsymMinus, Branch::Minus});
  return out;
}

Observables dprime_observables(FamilyTag tag, double gamma, double lambda,
                               double omega) {
  require_positive(gamma, lambda, omega);
  require_exists(tag, gamma, omega);
  const double g = gamma;
  const double l = lambda;
  const double sw = std::sqrt(omega);
  const double w32 = omega * sw;
  const double u = g * g * omega;
  const double s = std::sqrt(1.0 + u);
  const double s3 = (1.0 + u) * s;
  const double g3 = g * g * g;

  Observables obs;
  obs.omega = omega;
  switch (tag.family) {
    case Family::Sym:
      obs.mass = 4.0 * sw / l;
      obs.energy = -2.0 / (3.0 * l) * w32;
      obs.action = 4.0 / (3.0 * l) * w32;
      break;
    case Family::AsymPlus:
      obs.mass = 4.0 * sw / l + 2.0 / (l * g) * s - 2.0 / (l * g);
      obs.energy = -2.0 / (3.0 * l) * w32 + (2.0 - u) / (3.0 * l * g3) * s -
                   2.0 / (3.0 * l * g3);
      obs.action = 4.0 / (3.0 * l) * w32 + 2.0 / (3.0 * l * g3) * s3 -
                   omega / (l * g) - 2.0 / (3.0 * l * g3);
      break;
    case Family::Antisym:
      obs.mass = 4.0 * sw / l - 8.0 / (g * l);
      obs.energy = 16.0 / (3.0 * g3 * l) - 2.0 / (3.0 * l) * w32;
      obs.action =
          16.0 / (3.0 * g3 * l) - 4.0 * omega / (g * l) + 4.0 / (3.0 * l) * w32;
      break;
    case Family::AsymMinus:
      obs.mass = 4.0 * sw / l - 2.0 / (l * g) * s - 2.0 / (l * g);
      obs.energy = -2.0 / (3.0 * l) * w32 + (u - 2.0) / (3.0 * l * g3) * s -
                   2.0 / (3.0 * l * g3);
      obs.action = 4.0 / (3.0 * l) * w32 - 2.0 / (3.0 * l * g3) * s3 -
                   omega / (l * g) - 2.0 / (3.0 * l * g3);
      break;
  }
  return obs;
}

double asym_minus_mass_threshold(double gamma, double lambda) {
  return 8.0 * (std::sqrt(2.0) - 1.0) / (gamma * lambda);
}

double dprime_omega_from_mass(FamilyTag tag, double gamma, double lambda,
                              double rho) {
  if (!(gamma > 0.0) || !(lambda > 0.0))
    throw std::invalid_argument("gamma and lambda must be positive");
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");

  // Unit-parameter mass maps, transported by the scaling laws
  // omega -> gamma^2 omega, rho -> gamma lambda rho.
  const double r = gamma * lambda * rho;
  double sw_unit = 0.0;
  switch (tag.family) {
    case Family::Sym:
      sw_unit = r / 4.0;
      break;
    case Family::Antisym:
      sw_unit = r / 4.0 + 2.0;
      break;
    case Family::AsymPlus:
      sw_unit = (2.0 * r + 4.0 - std::sqrt(r * r + 4.0 * r + 16.0)) / 6.0;
      break;
    case Family::AsymMinus:
      if (!(rho > asym_minus_mass_threshold(gamma, lambda)))
        throw ThresholdError(
            "asym-minus requires rho > 8(sqrt(2)-1)/(gamma lambda)");
      sw_unit = (2.0 * r + 4.0 + std::sqrt(r * r + 4.0 * r + 16.0)) / 6.0;
      break;
  }
  const double sw = sw_unit / gamma;
  return sw * sw;
}

double dprime_energy_at_mass(FamilyTag tag, double gamma, double lambda,
                             double rho) {
  return dprime_observables(tag, gamma, lambda,
                            dprime_omega_from_mass(tag, gamma, lambda, rho))
      .energy;
}

ActionGaps action_gaps(double gamma, double lambda, double omega) {
  require_positive(gamma, lambda, omega);
  ActionGaps gaps;
  const FamilyTag sym{Family::Sym, Branch::Plus};
  const FamilyTag plus{Family::AsymPlus, Branch::Plus};
  gaps.gap_plus = dprime_observables(plus, gamma, lambda, omega).action -
                  dprime_observables(sym, gamma, lambda, omega).action;
  const FamilyTag minus{Family::AsymMinus, Branch::Plus};
  if (family_exists(minus, gamma, omega)) {
    const FamilyTag anti{Family::Antisym, Branch::Plus};
    gaps.gap_minus = dprime_observables(anti, gamma, lambda, omega).action -
                     dprime_observables(minus, gamma, lambda, omega).action;
  }
  return gaps;
}

std::vector<std::pair<FamilyTag, double>> fixed_mass_energy_ranking(
    double gamma, double lambda, double rho) {
  std::vector<std::pair<FamilyTag, double>> out;
  auto add = [&](Family f) {
    FamilyTag tag{f, Branch::Plus};
    if (f == Family::AsymMinus && !(rho > asym_minus_mass_threshold(gamma, lambda)))
      return;
    out.emplace_back(tag, dprime_energy_at_mass(tag, gamma, lambda, rho));
  };
  add(Family::Antisym);
  add(Family::Sym);
  add(Family::AsymPlus);
  add(Family::AsymMinus);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

ClosedFormTarget dprime_limit_target(FamilyTag tag, double gamma,
                                     double lambda, double rho,
                                     DPrimeLimit which) {
  if (!(gamma > 0.0) || !(lambda > 0.0) || !(rho > 0.0))
    throw std::invalid_argument("gamma, lambda, rho must be positive");
  using Notion = ClosedFormTarget::Notion;
  const double mirror = tag.branch == Branch::Plus ? 1.0 : -1.0;

  switch (which) {
    case DPrimeLimit::Linear:
      switch (tag.family) {
        case Family::Sym:
          // Amplitude shrinks like sqrt(lambda) at fixed mass.
          return ClosedFormTarget::zero(Notion::Weak);
        case Family::AsymPlus:
          return ClosedFormTarget::zero(
              Notion::Weak, "x2 diverges; the soliton escapes to infinity");
        case Family::Antisym:
          // Bound state of the linear delta-prime Hamiltonian, odd in x.
          return ClosedFormTarget::exp_cusp(std::sqrt(2.0 * rho / gamma),
                                            2.0 / gamma, -1, +1, Notion::Strong);
        case Family::AsymMinus:
          throw UndefinedLimitError(
              "asym-minus ceases to exist as lambda -> 0 at fixed mass");
      }
      break;

    case DPrimeLimit::GammaToZero:
      switch (tag.family) {
        case Family::AsymPlus: {
          const double b = lambda * rho / 4.0;
          const double a = std::sqrt(0.5 * lambda) * rho / 2.0;
          const double shift =
              mirror * 2.0 / (lambda * rho) * std::log(3.0 + 2.0 * std::sqrt(2.0));
          return ClosedFormTarget::soliton(a, b, shift, +1, +1, Notion::Strong);
        }
        case Family::Antisym:
          return ClosedFormTarget::zero(
              Notion::Distributional,
              "profile concentrates at 0; scaled center sqrt(w) xbar diverges");
        default:
          throw UndefinedLimitError("no gamma -> 0 limit for this family");
      }
      break;

    case DPrimeLimit::GammaToInfinity:
      switch (tag.family) {
        case Family::AsymPlus: {
          const double b = lambda * rho / 6.0;
          const double a = std::sqrt(0.5 * lambda) * rho / 3.0;
          const Side side = tag.branch == Branch::Plus ? Side::Left : Side::Right;
          ClosedFormTarget t =
              ClosedFormTarget::half_line_soliton(a, b, side, +1, Notion::Weak);
          t.escape_note = "one soliton of mass 2rho/3 escapes";
          return t;
        }
        case Family::Antisym: {
          const double b = lambda * rho / 4.0;
          const double a = std::sqrt(0.5 * lambda) * rho / 2.0;
          return ClosedFormTarget::soliton(a, b, 0.0, -1, +1, Notion::Strong);
        }
        case Family::AsymMinus: {
          const double b = lambda * rho / 2.0;
          const double a = std::sqrt(0.5 * lambda) * rho;
          const Side side = tag.branch == Branch::Plus ? Side::Right : Side::Left;
          const int sign = tag.branch == Branch::Plus ? -1 : +1;
          return ClosedFormTarget::half_line_soliton(a, b, side, sign,
                                                     Notion::Strong);
        }
        default:
          throw UndefinedLimitError("no gamma -> inf limit for this family");
      }
      break;
  }
  throw std::logic_error("unreachable limit");
}

}  // namespace nlsdefect
