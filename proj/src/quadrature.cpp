#include "nlsdefect/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "nlsdefect/errors.hpp"

namespace nlsdefect {
namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule
// (QUADPACK dqk15 constants), on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const Integrand& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);

  const double fc = f(mid);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double fv[15];
  fv[14] = fc;

  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(mid - dx);
    const double f2 = f(mid + dx);
    fv[2 * j] = f1;
    fv[2 * j + 1] = f2;
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }

  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] *
              (std::abs(fv[2 * j] - reskh) + std::abs(fv[2 * j + 1] - reskh));
  resasc *= std::abs(half);

  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));

  return Segment{a, b, resk * half, err};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b,
                           std::span<const double> breakpoints,
                           const QuadratureOptions& opts) {
  if (!(a < b)) return {0.0, 0.0, true};

  std::vector<double> knots{a, b};
  for (double x : breakpoints)
    if (x > a && x < b) knots.push_back(x);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  std::priority_queue<Segment> queue;
  double total = 0.0, total_err = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    Segment s = gk15(f, knots[i], knots[i + 1]);
    total += s.value;
    total_err += s.error;
    queue.push(s);
  }

  int used = static_cast<int>(queue.size());
  auto tolerance = [&] {
    return std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
  };

  while (total_err > tolerance() && used < opts.max_intervals) {
    Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval no longer splittable in double precision
      queue.push(worst);
      break;
    }
    Segment s1 = gk15(f, worst.a, mid);
    Segment s2 = gk15(f, mid, worst.b);
    total += s1.value + s2.value - worst.value;
    total_err += s1.error + s2.error - worst.error;
    queue.push(s1);
    queue.push(s2);
    ++used;
  }

  return {total, total_err, total_err <= tolerance()};
}

double integrate_checked(const Integrand& f, double a, double b,
                         std::span<const double> breakpoints,
                         const QuadratureOptions& opts) {
  QuadratureResult r = integrate(f, a, b, breakpoints, opts);
  const double required = std::max(1e-10, 100.0 * opts.rel_tol * std::abs(r.value));
  if (!r.converged && r.error > required)
    throw ToleranceError("adaptive quadrature stalled at error " +
                         std::to_string(r.error));
  return r.value;
}

}  // namespace nlsdefect
