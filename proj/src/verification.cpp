#include "nlsdefect/verification.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlsdefect/dprime_algebra.hpp"
#include "nlsdefect/errors.hpp"
#include "nlsdefect/limit_studies.hpp"
#include "nlsdefect/oracles.hpp"

namespace nlsdefect {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> grid(n);
  const double ratio = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) grid[i] = lo * std::exp(ratio * i);
  return grid;
}

std::vector<double> linear_grid_open_low(double lo, double hi, int n) {
  // n points in (lo, hi]: lo + i*(hi-lo)/n, i = 1..n
  std::vector<double> grid(n);
  for (int i = 1; i <= n; ++i) grid[i - 1] = lo + (hi - lo) * i / n;
  return grid;
}

struct SuiteBuilder {
  SuiteReport report;
  double scale;

  SuiteBuilder(std::string name, double tol_scale) : scale(tol_scale) {
    report.suite = std::move(name);
  }
  void add(const std::string& name, double measured, double tolerance) {
    const double tol = tolerance * scale;
    report.checks.push_back({name, measured, tol, measured <= tol});
  }
};

double rel_diff(double a, double b) {
  const double denom = std::max(std::abs(a), std::abs(b));
  if (denom == 0.0) return 0.0;
  return std::abs(a - b) / denom;
}

const std::vector<FamilyTag> kAllFamilies = {
    {Family::Sym, Branch::Plus},
    {Family::AsymPlus, Branch::Plus},
    {Family::Antisym, Branch::Plus},
    {Family::AsymMinus, Branch::Plus}};

}  // namespace

SuiteReport run_residual_suite(double tol_scale) {
  SuiteBuilder suite("residuals", tol_scale);
  const auto grid = default_residual_grid();

  // delta-prime branch, gamma = lambda = 1
  {
    const DPrimeModel model(1.0, 1.0);
    double stat = 0.0, cont = 0.0, jump = 0.0;
    int count_mismatches = 0;
    for (double omega : log_grid(0.1, 40.0, 100)) {
      const auto states = enumerate_states(1.0, 1.0, omega);
      const std::size_t expected =
          3 + (omega > 4.0 ? 1 : 0) + (omega > 8.0 ? 2 : 0);
      if (states.size() != expected) ++count_mismatches;
      for (const auto& [tag, state] : states) {
        const ResidualReport r = residuals(state, model, omega, grid);
        stat = std::max(stat, r.stationary_max);
        cont = std::max(cont, r.continuity_or_jump);
        jump = std::max(jump, r.derivative_condition);
      }
    }
    suite.add("dprime.stationary_max", stat, 1e-10);
    suite.add("dprime.derivative_continuity_max", cont, 1e-12);
    suite.add("dprime.jump_condition_max", jump, 1e-10);
    suite.add("dprime.state_count_mismatches", count_mismatches, 0.0);
  }

  // delta branch, alpha = lambda = 1
  {
    const DeltaModel model(1.0, 1.0);
    double stat = 0.0, cont = 0.0, jump = 0.0;
    for (double omega : log_grid(0.26, 100.0, 100)) {
      const PiecewiseSechState state = delta_state(model, omega);
      const ResidualReport r = residuals(state, model, omega, grid);
      stat = std::max(stat, r.stationary_max);
      cont = std::max(cont, r.continuity_or_jump);
      jump = std::max(jump, r.derivative_condition);
    }
    suite.add("delta.stationary_max", stat, 1e-10);
    suite.add("delta.continuity_max", cont, 1e-12);
    suite.add("delta.jump_condition_max", jump, 1e-10);
  }

  return suite.report;
}

SuiteReport run_observable_suite(double tol_scale) {
  SuiteBuilder suite("observables", tol_scale);

  // Closure against quadrature plus the action identity, delta-prime side.
  {
    const DPrimeModel model(1.0, 1.0);
    double closure = 0.0, identity = 0.0;
    for (double omega : log_grid(0.1, 40.0, 100)) {
      for (const auto& [tag, state] : enumerate_states(1.0, 1.0, omega)) {
        const Observables closed = dprime_observables(tag, 1.0, 1.0, omega);
        const Observables quad = quadrature_observables(state, model);
        closure = std::max({closure, rel_diff(closed.mass, quad.mass),
                            rel_diff(closed.energy, quad.energy),
                            rel_diff(closed.action, quad.action)});
        // Relative to the largest term entering the identity.
        const double terms = std::max({std::abs(closed.action),
                                       std::abs(closed.energy),
                                       0.5 * omega * closed.mass});
        identity = std::max(
            identity,
            std::abs(closed.action - closed.energy - 0.5 * omega * closed.mass) /
                terms);
      }
    }
    suite.add("dprime.closure_rel_max", closure, 1e-8);
    suite.add("dprime.action_identity_rel_max", identity, 1e-12);
  }

  // Closure, delta side.
  {
    const DeltaModel model(1.0, 1.0);
    double closure = 0.0, identity = 0.0;
    for (double omega : log_grid(0.26, 100.0, 100)) {
      const Observables closed = delta_observables(model, omega);
      const Observables quad =
          quadrature_observables(delta_state(model, omega), model);
      closure = std::max({closure, rel_diff(closed.mass, quad.mass),
                          rel_diff(closed.energy, quad.energy),
                          rel_diff(closed.action, quad.action)});
      const double terms =
          std::max({std::abs(closed.action), std::abs(closed.energy),
                    0.5 * omega * closed.mass});
      identity = std::max(
          identity,
          std::abs(closed.action - closed.energy - 0.5 * omega * closed.mass) /
              terms);
    }
    suite.add("delta.closure_rel_max", closure, 1e-8);
    suite.add("delta.action_identity_rel_max", identity, 1e-12);
  }

  // Nehari residual by quadrature on every state of both standard grids.
  {
    double nehari = 0.0;
    const auto grid = default_residual_grid();
    const DPrimeModel dp(1.0, 1.0);
    for (double omega : log_grid(0.1, 40.0, 30))
      for (const auto& [tag, state] : enumerate_states(1.0, 1.0, omega))
        nehari = std::max(nehari,
                          std::abs(residuals(state, dp, omega, grid).nehari));
    const DeltaModel dm(1.0, 1.0);
    for (double omega : log_grid(0.26, 100.0, 30))
      nehari = std::max(
          nehari,
          std::abs(residuals(delta_state(dm, omega), dm, omega, grid).nehari));
    suite.add("nehari_abs_max", nehari, 1e-8);
  }

  // dS/domega = rho/2 by central differences along every branch.
  {
    double worst = 0.0;
    auto check_branch = [&](FamilyTag tag, double lo, double hi) {
      for (double omega : log_grid(lo, hi, 40)) {
        const double h = 1e-4 * omega;
        const double fd =
            (dprime_observables(tag, 1.0, 1.0, omega + h).action -
             dprime_observables(tag, 1.0, 1.0, omega - h).action) /
            (2.0 * h);
        const double expected =
            0.5 * dprime_observables(tag, 1.0, 1.0, omega).mass;
        worst = std::max(worst, std::abs(fd - expected) /
                                    std::max(std::abs(expected), 1e-12));
      }
    };
    check_branch({Family::Sym, Branch::Plus}, 0.1, 40.0);
    check_branch({Family::AsymPlus, Branch::Plus}, 0.1, 40.0);
    check_branch({Family::Antisym, Branch::Plus}, 4.5, 40.0);
    check_branch({Family::AsymMinus, Branch::Plus}, 8.5, 40.0);
    const DeltaModel dm(1.0, 1.0);
    for (double omega : log_grid(0.26, 100.0, 40)) {
      const double h = 1e-4 * omega;
      const double fd = (delta_observables(dm, omega + h).action -
                         delta_observables(dm, omega - h).action) /
                        (2.0 * h);
      const double expected = 0.5 * delta_observables(dm, omega).mass;
      worst = std::max(worst, std::abs(fd - expected) /
                                  std::max(std::abs(expected), 1e-12));
    }
    suite.add("ds_domega_rel_max", worst, 1e-6);
  }

  // dE/drho = -omega/2 along every fixed-mass branch.
  {
    double worst = 0.0;
    auto check_branch = [&](FamilyTag tag, double lo, double hi) {
      for (double rho : log_grid(lo, hi, 40)) {
        const double h = 1e-4 * rho;
        const double fd =
            (dprime_energy_at_mass(tag, 1.0, 1.0, rho + h) -
             dprime_energy_at_mass(tag, 1.0, 1.0, rho - h)) /
            (2.0 * h);
        const double expected =
            -0.5 * dprime_omega_from_mass(tag, 1.0, 1.0, rho);
        worst = std::max(worst, std::abs(fd - expected) / std::abs(expected));
      }
    };
    check_branch({Family::Sym, Branch::Plus}, 0.5, 18.0);
    check_branch({Family::AsymPlus, Branch::Plus}, 0.5, 18.0);
    check_branch({Family::Antisym, Branch::Plus}, 0.5, 18.0);
    check_branch({Family::AsymMinus, Branch::Plus},
                 asym_minus_mass_threshold(1.0, 1.0) * 1.05, 18.0);
    suite.add("de_drho_rel_max", worst, 1e-6);
  }

  return suite.report;
}

SuiteReport run_algebra_suite(double tol_scale) {
  SuiteBuilder suite("algebra", tol_scale);

  double worst_component = 0.0;
  double worst_invariant = 0.0;
  int count_mismatches = 0;

  for (double gamma : {0.5, 0.8, 1.0, 1.6, 2.5}) {
    const double g2 = gamma * gamma;
    for (double omega : log_grid(0.5 / g2, 32.0 / g2, 40)) {
      const double u = g2 * omega;
      const double s = std::sqrt(1.0 + u);
      const double g_sqrt_w = gamma * std::sqrt(omega);

      // T+ closed form vs brute force, plus the proof identities.
      const TPlusSolution tp = solve_t_plus(gamma, omega);
      const auto plus_roots =
          brute_force_t_systems(TSystem::Plus, gamma, omega);
      if (plus_roots.size() != 1) {
        ++count_mismatches;
      } else {
        worst_component =
            std::max({worst_component, std::abs(plus_roots[0].first - tp.t1),
                      std::abs(plus_roots[0].second - tp.t2)});
      }
      worst_invariant = std::max(
          {worst_invariant,
           std::abs(tp.t1 * tp.t1 + tp.t2 * tp.t2 - 1.0),
           std::abs(tp.t1 * tp.t2 - (s - 1.0) / u),
           std::abs(tp.t2 - tp.t1 - (s - 1.0) / g_sqrt_w),
           std::abs(1.0 / tp.t1 - 1.0 / tp.t2 - g_sqrt_w)});

      // T- classification vs brute force.
      const TMinusSolutions tm = solve_t_minus(gamma, omega);
      const auto minus_roots =
          brute_force_t_systems(TSystem::Minus, gamma, omega);
      if (std::holds_alternative<TMinusNone>(tm)) {
        if (!minus_roots.empty()) ++count_mismatches;
      } else if (std::holds_alternative<TMinusSymmetric>(tm)) {
        const double t_sym = std::get<TMinusSymmetric>(tm).t_sym;
        if (minus_roots.size() != 1) {
          ++count_mismatches;
        } else {
          worst_component = std::max(
              {worst_component, std::abs(minus_roots[0].first - t_sym),
               std::abs(minus_roots[0].second - t_sym)});
        }
      } else {
        const TMinusFull& full = std::get<TMinusFull>(tm);
        if (minus_roots.size() != 3) {
          ++count_mismatches;
        } else {
          // Sorted by t1: (t2, t1), (t_sym, t_sym), (t1, t2).
          worst_component = std::max(
              {worst_component, std::abs(minus_roots[0].first - full.t2),
               std::abs(minus_roots[0].second - full.t1),
               std::abs(minus_roots[1].first - full.t_sym),
               std::abs(minus_roots[2].first - full.t1),
               std::abs(minus_roots[2].second - full.t2)});
        }
        worst_invariant = std::max(
            {worst_invariant,
             std::abs(full.t1 * full.t1 + full.t2 * full.t2 - 1.0),
             std::abs(full.t1 + full.t2 - (1.0 + s) / g_sqrt_w),
             std::abs(1.0 / full.t1 + 1.0 / full.t2 - g_sqrt_w)});
      }
    }
  }
  suite.add("t_systems.brute_force_component_max", worst_component, 1e-10);
  suite.add("t_systems.identity_max", worst_invariant, 1e-12);
  suite.add("t_systems.count_mismatches", count_mismatches, 0.0);

  // Classification boundaries are sharp at 4/gamma^2 and 8/gamma^2.
  int boundary_mismatches = 0;
  for (double gamma : {0.5, 1.0, 2.0}) {
    const double g2 = gamma * gamma;
    const double w4 = 4.0 / g2, w8 = 8.0 / g2;
    if (!std::holds_alternative<TMinusNone>(
            solve_t_minus(gamma, w4 * (1.0 - 1e-12))))
      ++boundary_mismatches;
    if (!std::holds_alternative<TMinusSymmetric>(
            solve_t_minus(gamma, w4 * (1.0 + 1e-12))))
      ++boundary_mismatches;
    if (!std::holds_alternative<TMinusSymmetric>(
            solve_t_minus(gamma, w8 * (1.0 - 1e-12))))
      ++boundary_mismatches;
    if (!std::holds_alternative<TMinusSymmetric>(solve_t_minus(gamma, w8)))
      ++boundary_mismatches;
    if (!std::holds_alternative<TMinusFull>(
            solve_t_minus(gamma, w8 * (1.0 + 1e-12))))
      ++boundary_mismatches;
  }
  suite.add("t_minus.boundary_mismatches", boundary_mismatches, 0.0);

  return suite.report;
}

SuiteReport run_ordering_suite(double tol_scale) {
  SuiteBuilder suite("orderings", tol_scale);
  const FamilyTag sym{Family::Sym, Branch::Plus};
  const FamilyTag plus{Family::AsymPlus, Branch::Plus};
  const FamilyTag anti{Family::Antisym, Branch::Plus};
  const FamilyTag minus{Family::AsymMinus, Branch::Plus};

  auto action = [](FamilyTag tag, double omega) {
    return dprime_observables(tag, 1.0, 1.0, omega).action;
  };

  int violations = 0;
  for (double omega : linear_grid_open_low(0.0, 20.0, 500))
    if (!(action(sym, omega) < action(plus, omega))) ++violations;
  suite.add("disug1.violations", violations, 0.0);

  violations = 0;
  for (double omega : linear_grid_open_low(4.0, 20.0, 500)) {
    const double s_anti = action(anti, omega);
    const double s_sym = action(sym, omega);
    if (!(s_anti < s_sym && s_sym < action(plus, omega))) ++violations;
  }
  suite.add("disug2.violations", violations, 0.0);

  violations = 0;
  for (double omega : linear_grid_open_low(8.0, 40.0, 500)) {
    const double s_minus = action(minus, omega);
    const double s_anti = action(anti, omega);
    const double s_sym = action(sym, omega);
    if (!(s_minus < s_anti && s_anti < s_sym && s_sym < action(plus, omega)))
      ++violations;
  }
  suite.add("disug3.violations", violations, 0.0);

  violations = 0;
  for (double rho : linear_grid_open_low(0.0, 20.0, 500)) {
    const double e_anti = dprime_energy_at_mass(anti, 1.0, 1.0, rho);
    const double e_sym = dprime_energy_at_mass(sym, 1.0, 1.0, rho);
    const double e_plus = dprime_energy_at_mass(plus, 1.0, 1.0, rho);
    if (!(e_anti < e_sym && e_sym < e_plus)) ++violations;
  }
  suite.add("ineq1.violations", violations, 0.0);

  violations = 0;
  for (double rho : linear_grid_open_low(3.3138, 20.0, 500)) {
    const double e_minus = dprime_energy_at_mass(minus, 1.0, 1.0, rho);
    const double e_anti = dprime_energy_at_mass(anti, 1.0, 1.0, rho);
    const double e_sym = dprime_energy_at_mass(sym, 1.0, 1.0, rho);
    const double e_plus = dprime_energy_at_mass(plus, 1.0, 1.0, rho);
    if (!(e_minus < e_anti && e_anti < e_sym && e_sym < e_plus)) ++violations;
  }
  suite.add("ineq2.violations", violations, 0.0);

  // Contact point of the antisym and asym-minus branches at
  // rho* = 8(sqrt(2)-1): equal energies -(16/3)(2 sqrt(2)-1), equal slopes -4.
  {
    const double rho_star = asym_minus_mass_threshold(1.0, 1.0);
    const double e_ref = -16.0 / 3.0 * (2.0 * std::sqrt(2.0) - 1.0);
    const double e_anti = dprime_energy_at_mass(anti, 1.0, 1.0, rho_star);

    // Continuous extension of the asym-minus energy at its mass threshold,
    // via the unit-parameter energy-vs-mass polynomial.
    auto e_minus_ext = [](double rho) {
      const double q = rho * rho + 4.0 * rho + 16.0;
      return -5.0 / 216.0 * rho * rho * rho - std::pow(q, 1.5) / 54.0 -
             5.0 / 36.0 * rho * rho - 4.0 / 9.0 * rho - 32.0 / 27.0;
    };
    suite.add("rho_star.antisym_energy_abs_err", std::abs(e_anti - e_ref), 1e-8);
    suite.add("rho_star.asym_minus_energy_abs_err",
              std::abs(e_minus_ext(rho_star) - e_ref), 1e-8);

    const double h = 1e-4;
    const double slope_anti =
        (dprime_energy_at_mass(anti, 1.0, 1.0, rho_star + h) -
         dprime_energy_at_mass(anti, 1.0, 1.0, rho_star - h)) /
        (2.0 * h);
    // One-sided second-order stencil; the branch only exists above rho*.
    const double slope_minus =
        (-3.0 * e_minus_ext(rho_star) + 4.0 * e_minus_ext(rho_star + h) -
         e_minus_ext(rho_star + 2.0 * h)) /
        (2.0 * h);
    suite.add("rho_star.antisym_slope_abs_err", std::abs(slope_anti + 4.0), 1e-8);
    suite.add("rho_star.asym_minus_slope_abs_err", std::abs(slope_minus + 4.0),
              1e-8);
  }

  return suite.report;
}

SuiteReport run_bifurcation_suite(double tol_scale) {
  SuiteBuilder suite("bifurcation", tol_scale);

  int violations = 0;
  for (double omega : linear_grid_open_low(0.0, 20.0, 500))
    if (!(action_gaps(1.0, 1.0, omega).gap_plus > 0.0)) ++violations;
  suite.add("gap_plus.positivity_violations", violations, 0.0);

  const double tiny = action_gaps(1.0, 1.0, 1e-6).gap_plus;
  suite.add("gap_plus.value_at_1e-6", tiny, 1e-9);
  suite.add("gap_plus.tangency_ratio_at_1e-6", tiny / 1e-6, 1e-6);

  // Second difference of gap_plus against the closed-form curvature
  // (gamma^2/2)(1 + gamma^2 omega)^{-1/2} at gamma = lambda = 1.
  {
    double worst = 0.0;
    const double h = 1e-3;
    for (double omega : log_grid(0.1, 20.0, 100)) {
      const double d2 = (action_gaps(1.0, 1.0, omega + h).gap_plus -
                         2.0 * action_gaps(1.0, 1.0, omega).gap_plus +
                         action_gaps(1.0, 1.0, omega - h).gap_plus) /
                        (h * h);
      const double expected = 0.5 / std::sqrt(1.0 + omega);
      worst = std::max(worst, std::abs(d2 - expected) / expected);
    }
    suite.add("gap_plus.curvature_rel_max", worst, 1e-5);
  }

  violations = 0;
  for (double omega : linear_grid_open_low(8.0, 40.0, 500)) {
    const auto gaps = action_gaps(1.0, 1.0, omega);
    if (!gaps.gap_minus || !(*gaps.gap_minus > 0.0)) ++violations;
  }
  suite.add("gap_minus.positivity_violations", violations, 0.0);

  // gap_minus vanishes with zero slope at omega = 8: the difference quotient
  // gap(8+h)/h halves with h and extrapolates to 0.
  {
    int positivity = 0;
    double ratio_dev = 0.0;
    double prev_quotient = 0.0;
    double last_quotient = 0.0;
    for (int k = 1; k <= 10; ++k) {
      const double h = std::ldexp(1.0, -k);
      const auto gaps = action_gaps(1.0, 1.0, 8.0 + h);
      if (!gaps.gap_minus || !(*gaps.gap_minus > 0.0)) ++positivity;
      const double quotient = *gaps.gap_minus / h;
      if (k > 1)
        ratio_dev = std::max(ratio_dev, std::abs(quotient / prev_quotient - 0.5));
      prev_quotient = quotient;
      last_quotient = quotient;
    }
    suite.add("gap_minus.threshold_positivity_violations", positivity, 0.0);
    suite.add("gap_minus.threshold_quotient_halving_dev", ratio_dev, 0.02);
    suite.add("gap_minus.threshold_slope_extrapolation", last_quotient, 1e-4);
  }

  return suite.report;
}

SuiteReport run_limit_suite(double tol_scale) {
  SuiteBuilder suite("limits", tol_scale);

  auto run = [&](const std::string& name, StudySubject subject, LimitKind kind,
                 LimitContext ctx) {
    const auto sequence = default_limit_sequence(subject, kind);
    const LimitStudy study = run_limit_study(subject, kind, ctx, sequence);
    suite.add(name + ".not_converged",
              study.verdict == Verdict::Converged ? 0.0 : 1.0, 0.0);
  };

  const FamilyTag sym{Family::Sym, Branch::Plus};
  const FamilyTag plus{Family::AsymPlus, Branch::Plus};
  const FamilyTag anti{Family::Antisym, Branch::Plus};
  const FamilyTag minus{Family::AsymMinus, Branch::Plus};

  run("delta_linear", DeltaBranchTag{}, LimitKind::LambdaToZero, {1.0, 1.0, 2.0});
  run("delta_no_defect", DeltaBranchTag{}, LimitKind::AlphaToZero, {1.0, 1.0, 2.0});
  run("dprime_sym_linear", sym, LimitKind::LambdaToZero, {1.0, 1.0, 2.0});
  run("dprime_asym_plus_linear", plus, LimitKind::LambdaToZero, {1.0, 1.0, 2.0});
  run("dprime_antisym_linear", anti, LimitKind::LambdaToZero, {1.0, 1.0, 2.0});
  run("dprime_asym_plus_gamma0", plus, LimitKind::GammaToZero, {1.0, 1.0, 2.0});
  run("dprime_antisym_gamma0", anti, LimitKind::GammaToZero, {1.0, 1.0, 2.0});
  run("dprime_asym_plus_gamma_inf", plus, LimitKind::GammaToInfinity,
      {1.0, 1.0, 2.0});
  run("dprime_antisym_gamma_inf", anti, LimitKind::GammaToInfinity,
      {1.0, 1.0, 4.0});
  run("dprime_asym_minus_gamma_inf", minus, LimitKind::GammaToInfinity,
      {1.0, 1.0, 4.0});

  // The asym-minus linear limit must be rejected: its mass threshold
  // 8(sqrt(2)-1)/(gamma lambda) blows up as lambda -> 0.
  {
    bool rejected = false;
    try {
      run_limit_study(minus, LimitKind::LambdaToZero, {1.0, 1.0, 4.0},
                      default_limit_sequence(minus, LimitKind::LambdaToZero));
    } catch (const UndefinedLimitError&) {
      rejected = true;
    }
    suite.add("dprime_asym_minus_linear.not_rejected", rejected ? 0.0 : 1.0,
              0.0);
  }

  // Mass bookkeeping of the weak gamma -> inf limit: at the last parameter,
  // one third of the mass sits on the kept side and two thirds escape.
  {
    const auto seq = default_limit_sequence(plus, LimitKind::GammaToInfinity);
    const double gamma = seq.back();
    const double rho = 2.0;
    const double omega = dprime_omega_from_mass(plus, gamma, 1.0, rho);
    const PiecewiseSechState state = dprime_state(plus, gamma, 1.0, omega);
    const ProfileView v = make_view(state);
    const double kept = integrate_checked(
        [&](double x) { const double p = state.value(x); return p * p; },
        -v.tail, 0.0, v.breakpoints);
    const double escaped = integrate_checked(
        [&](double x) { const double p = state.value(x); return p * p; }, 0.0,
        v.tail, v.breakpoints);
    suite.add("dprime_asym_plus_gamma_inf.kept_mass_err",
              std::abs(kept - rho / 3.0), 0.01 * rho);
    suite.add("dprime_asym_plus_gamma_inf.escaped_mass_err",
              std::abs(escaped - 2.0 * rho / 3.0), 0.01 * rho);
  }

  return suite.report;
}

std::vector<SuiteReport> run_suites(const std::string& which,
                                    double tol_scale) {
  std::vector<SuiteReport> reports;
  auto want = [&](const char* name) { return which == "all" || which == name; };
  if (want("residuals")) reports.push_back(run_residual_suite(tol_scale));
  if (want("observables")) reports.push_back(run_observable_suite(tol_scale));
  if (want("algebra")) reports.push_back(run_algebra_suite(tol_scale));
  if (want("orderings")) reports.push_back(run_ordering_suite(tol_scale));
  if (want("bifurcation")) reports.push_back(run_bifurcation_suite(tol_scale));
  if (want("limits")) reports.push_back(run_limit_suite(tol_scale));
  if (reports.empty())
    throw std::invalid_argument("unknown suite: " + which);
  return reports;
}

}  // namespace nlsdefect
