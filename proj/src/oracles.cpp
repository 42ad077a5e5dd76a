#include "nlsdefect/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "nlsdefect/quadrature.hpp"

namespace nlsdefect {

Observables quadrature_observables(const PiecewiseSechState& state,
                                   const DefectModel& model) {
  const ProfileView v = make_view(state);
  const double tail = std::max(v.tail, 1.0);

  auto integrate_both = [&](const Integrand& f) {
    return integrate_checked(f, -tail, 0.0, v.breakpoints) +
           integrate_checked(f, 0.0, tail, v.breakpoints);
  };

  const double mass =
      integrate_both([&](double x) { const double p = state.value(x); return p * p; });
  const double kinetic =
      integrate_both([&](double x) { const double d = state.slope(x); return d * d; });
  const double quartic = integrate_both([&](double x) {
    const double p = state.value(x);
    return p * p * p * p;
  });

  double defect = 0.0;
  double lambda = 0.0;
  if (std::holds_alternative<DeltaModel>(model)) {
    const DeltaModel& m = std::get<DeltaModel>(model);
    lambda = m.lambda;
    const double psi0 = state.value_at_zero(Side::Right);
    defect = -0.5 * m.alpha * psi0 * psi0;
  } else {
    const DPrimeModel& m = std::get<DPrimeModel>(model);
    lambda = m.lambda;
    const double jump =
        state.value_at_zero(Side::Right) - state.value_at_zero(Side::Left);
    defect = -jump * jump / (2.0 * m.gamma);
  }

  Observables obs;
  obs.omega = state.omega();
  obs.mass = mass;
  obs.energy = 0.5 * kinetic + defect - 0.25 * lambda * quartic;
  obs.action = obs.energy + 0.5 * state.omega() * mass;
  return obs;
}

std::vector<double> default_residual_grid() {
  std::vector<double> grid;
  grid.reserve(4001);
  for (int i = 0; i <= 4000; ++i) {
    const double x = -15.0 + 30.0 * i / 4000.0;
    if (std::abs(x) > 1e-6) grid.push_back(x);
  }
  return grid;
}

ResidualReport residuals(const PiecewiseSechState& state,
                         const DefectModel& model, double omega,
                         std::span<const double> grid) {
  const double lambda = std::holds_alternative<DeltaModel>(model)
                            ? std::get<DeltaModel>(model).lambda
                            : std::get<DPrimeModel>(model).lambda;

  ResidualReport report;
  for (double x : grid) {
    const double p = state.value(x);
    const double resid =
        -state.curvature(x) - lambda * p * p * p + omega * p;
    report.stationary_max = std::max(report.stationary_max, std::abs(resid));
  }

  const double v_l = state.value_at_zero(Side::Left);
  const double v_r = state.value_at_zero(Side::Right);
  const double d_l = state.slope_at_zero(Side::Left);
  const double d_r = state.slope_at_zero(Side::Right);

  if (std::holds_alternative<DeltaModel>(model)) {
    const double alpha = std::get<DeltaModel>(model).alpha;
    report.continuity_or_jump = std::abs(v_r - v_l);
    report.derivative_condition = std::abs(d_r - d_l + alpha * v_r);
  } else {
    const double gamma = std::get<DPrimeModel>(model).gamma;
    report.continuity_or_jump = std::abs(d_r - d_l);
    report.derivative_condition = std::abs(v_r - v_l + gamma * d_r);
  }

  const Observables quad = quadrature_observables(state, model);
  const ProfileView v = make_view(state);
  const double tail = std::max(v.tail, 1.0);
  auto quartic = [&](double x) {
    const double p = state.value(x);
    return p * p * p * p;
  };
  const double l4 = integrate_checked(quartic, -tail, 0.0, v.breakpoints) +
                    integrate_checked(quartic, 0.0, tail, v.breakpoints);
  report.nehari = 2.0 * quad.action - 0.5 * lambda * l4;
  return report;
}

namespace {

// Scaled residuals of the matching systems: multiplying the reciprocal
// equation by t1 t2 gives polynomials that are scan-friendly on [0,1]^2.
//   plus:  f2 = t2 - t1 - g t1 t2      (1/t1 - 1/t2 = g)
//   minus: f2 = t2 + t1 - g t1 t2      (1/t1 + 1/t2 = g)
struct TSystemResiduals {
  TSystem kind;
  double g;  // gamma sqrt(omega)

  double f1(double t1, double t2) const {
    return t1 * t1 - std::pow(t1, 4) - t2 * t2 + std::pow(t2, 4);
  }
  double f2(double t1, double t2) const {
    const double cross = g * t1 * t2;
    return kind == TSystem::Plus ? t2 - t1 - cross : t2 + t1 - cross;
  }
  void jacobian(double t1, double t2, double j[2][2]) const {
    j[0][0] = 2.0 * t1 - 4.0 * t1 * t1 * t1;
    j[0][1] = -2.0 * t2 + 4.0 * t2 * t2 * t2;
    j[1][0] = (kind == TSystem::Plus ? -1.0 : 1.0) - g * t2;
    j[1][1] = 1.0 - g * t1;
  }
};

bool newton_polish(const TSystemResiduals& sys, double& t1, double& t2) {
  auto norm = [&](double a, double b) {
    return std::max(std::abs(sys.f1(a, b)), std::abs(sys.f2(a, b)));
  };
  double r = norm(t1, t2);
  for (int iter = 0; iter < 50; ++iter) {
    if (r < 1e-14 * std::max(1.0, sys.g)) return true;
    double j[2][2];
    sys.jacobian(t1, t2, j);
    const double det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
    if (std::abs(det) < 1e-14) return false;
    const double f1 = sys.f1(t1, t2);
    const double f2 = sys.f2(t1, t2);
    double dt1 = -(j[1][1] * f1 - j[0][1] * f2) / det;
    double dt2 = -(-j[1][0] * f1 + j[0][0] * f2) / det;
    // Halve the step until the residual drops.
    bool accepted = false;
    for (int damp = 0; damp < 30; ++damp) {
      const double n1 = t1 + dt1;
      const double n2 = t2 + dt2;
      const double rn = norm(n1, n2);
      if (rn < r) {
        t1 = n1;
        t2 = n2;
        r = rn;
        accepted = true;
        break;
      }
      dt1 *= 0.5;
      dt2 *= 0.5;
    }
    if (!accepted) return false;
  }
  return r < 1e-14 * std::max(1.0, sys.g);
}

}  // namespace

std::vector<std::pair<double, double>> brute_force_t_systems(TSystem kind,
                                                             double gamma,
                                                             double omega) {
  const TSystemResiduals sys{kind, gamma * std::sqrt(omega)};
  constexpr int n = 400;

  std::vector<double> t(n), p(n);  // p(t) = t^2 - t^4
  for (int i = 0; i < n; ++i) {
    t[i] = static_cast<double>(i) / (n - 1);
    p[i] = t[i] * t[i] - std::pow(t[i], 4);
  }

  std::vector<std::pair<double, double>> roots;
  auto push_root = [&](double t1, double t2) {
    // Keep only genuine solutions of the original reciprocal system.
    if (t1 < 1e-6 || t2 < 1e-6) return;
    if (t1 > 1.0 + 1e-9 || t2 > 1.0 + 1e-9) return;
    const double resid2 = kind == TSystem::Plus
                              ? 1.0 / t1 - 1.0 / t2 - sys.g
                              : 1.0 / t1 + 1.0 / t2 - sys.g;
    if (std::abs(sys.f1(t1, t2)) > 1e-12 || std::abs(resid2) > 1e-12) return;
    for (const auto& r : roots)
      if (std::abs(r.first - t1) < 1e-9 && std::abs(r.second - t2) < 1e-9)
        return;
    roots.emplace_back(t1, t2);
  };

  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j + 1 < n; ++j) {
      const double f1_vals[4] = {p[i] - p[j], p[i + 1] - p[j],
                                 p[i] - p[j + 1], p[i + 1] - p[j + 1]};
      const double f2_vals[4] = {
          sys.f2(t[i], t[j]), sys.f2(t[i + 1], t[j]), sys.f2(t[i], t[j + 1]),
          sys.f2(t[i + 1], t[j + 1])};
      auto sign_change = [](const double v[4]) {
        bool pos = false, neg = false;
        for (int k = 0; k < 4; ++k) {
          pos = pos || v[k] > 0.0;
          neg = neg || v[k] < 0.0;
        }
        return pos && neg;
      };
      if (!sign_change(f1_vals) || !sign_change(f2_vals)) continue;
      double t1 = 0.5 * (t[i] + t[i + 1]);
      double t2 = 0.5 * (t[j] + t[j + 1]);
      if (newton_polish(sys, t1, t2)) push_root(t1, t2);
    }
  }

  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace nlsdefect
