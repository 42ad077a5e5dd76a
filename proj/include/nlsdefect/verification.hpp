#pragma once

#include <string>
#include <vector>

namespace nlsdefect {

/// One named verification entry. `pass` means measured <= tolerance; checks
/// counting strict-inequality violations use tolerance 0.
struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
};

/// Every tolerance below is pinned; `tol_scale` multiplies them (the CLI
/// --tol flag) and is 1 for the acceptance run.
SuiteReport run_residual_suite(double tol_scale = 1.0);

/// Closed-form observables vs quadrature, plus the variational identities
/// S = E + (omega/2) rho, dS/domega = rho/2, dE/drho = -omega/2 and the
/// Nehari residual 2 S - (lambda/2) |psi|_4^4.
SuiteReport run_observable_suite(double tol_scale = 1.0);

SuiteReport run_algebra_suite(double tol_scale = 1.0);

SuiteReport run_ordering_suite(double tol_scale = 1.0);

SuiteReport run_bifurcation_suite(double tol_scale = 1.0);

SuiteReport run_limit_suite(double tol_scale = 1.0);

/// which: one suite name or "all".
std::vector<SuiteReport> run_suites(const std::string& which,
                                    double tol_scale = 1.0);

}  // namespace nlsdefect
