#include "nlsdefect/distance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "nlsdefect/quadrature.hpp"

namespace nlsdefect {
namespace {

std::vector<double> merged_breakpoints(const ProfileView& f,
                                       const ProfileView& g) {
  std::vector<double> pts = f.breakpoints;
  pts.insert(pts.end(), g.breakpoints.begin(), g.breakpoints.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

double h1_distance(const ProfileView& f, const ProfileView& g,
                   bool require_continuity) {
  if (require_continuity) {
    const double scale = std::max({std::abs(f.value0_left),
                                   std::abs(f.value0_right),
                                   std::abs(g.value0_left),
                                   std::abs(g.value0_right), 1.0});
    if (std::abs(f.value0_left - f.value0_right) > 1e-8 * scale ||
        std::abs(g.value0_left - g.value0_right) > 1e-8 * scale)
      throw std::invalid_argument(
          "H1_global requires both profiles continuous at 0");
  }

  const double tail = std::max({f.tail, g.tail, 1.0});
  const auto pts = merged_breakpoints(f, g);
  auto integrand = [&](double x) {
    const double dv = f.value(x) - g.value(x);
    const double ds = f.slope(x) - g.slope(x);
    return dv * dv + ds * ds;
  };
  // Split at 0 so the quadrature never straddles the interface.
  const double neg = integrate_checked(integrand, -tail, 0.0, pts);
  const double pos = integrate_checked(integrand, 0.0, tail, pts);
  return std::sqrt(std::max(0.0, neg + pos));
}

double sup_distance(const ProfileView& f, const ProfileView& g, double radius) {
  const int n = 20001;
  double sup = std::max(std::abs(f.value0_left - g.value0_left),
                        std::abs(f.value0_right - g.value0_right));
  std::vector<double> probes;
  probes.reserve(n + 64);
  for (int i = 0; i < n; ++i)
    probes.push_back(-radius + 2.0 * radius * i / (n - 1));
  // Geometric probes resolve boundary layers near the interface.
  for (double x = radius; x > 1e-14; x *= 0.5) {
    probes.push_back(x);
    probes.push_back(-x);
  }
  for (const auto& pts : {f.breakpoints, g.breakpoints})
    for (double x : pts)
      if (std::abs(x) <= radius) probes.push_back(x);
  for (double x : probes) {
    if (x == 0.0) continue;
    sup = std::max(sup, std::abs(f.value(x) - g.value(x)));
  }
  return sup;
}

}  // namespace

double distance(const ProfileView& f, const ProfileView& g,
                const DistanceKind& metric) {
  if (std::holds_alternative<H1Global>(metric)) return h1_distance(f, g, true);
  if (std::holds_alternative<H1Broken>(metric)) return h1_distance(f, g, false);
  return sup_distance(f, g, std::get<SupOnWindow>(metric).radius);
}

double primitive_sup_on_window(const ProfileView& f, double radius) {
  // Probe points: uniform cover plus a geometric cluster at the origin.
  std::vector<double> probes;
  for (int i = 0; i <= 256; ++i)
    probes.push_back(-radius + 2.0 * radius * i / 256.0);
  for (double x = radius * 0.5; x > 1e-16 * radius; x *= 0.5) {
    probes.push_back(x);
    probes.push_back(-x);
  }
  probes.push_back(0.0);
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());

  double running = 0.0;
  double sup = 0.0;
  for (std::size_t i = 0; i + 1 < probes.size(); ++i) {
    running +=
        integrate_checked(f.value, probes[i], probes[i + 1], f.breakpoints);
    sup = std::max(sup, std::abs(running));
  }
  return sup;
}

}  // namespace nlsdefect
