#pragma once

#include <functional>
#include <string>
#include <vector>

namespace nlsdefect {

/// Overflow-safe hyperbolic secant.
double sech(double u);

enum class Side { Left, Right };

/// A single profile sign * A * sech(B*x - c); the peak sits at x = c/B.
struct SechPiece {
  double sign = 1.0;       // +1 or -1
  double amplitude = 1.0;  // A > 0
  double width = 1.0;      // B > 0
  double center = 0.0;     // c

  double value(double x) const;
  double slope(double x) const;
  double curvature(double x) const;  // uses sech'' = sech - 2 sech^3
  double peak_x() const { return center / width; }
};

/// Two-piece bound-state profile: `left` on x < 0, `right` on x > 0, both
/// pieces sharing the coupling A = sqrt(2*omega/lambda), B = sqrt(omega).
/// Evaluation at x = 0 returns the right piece; boundary work always goes
/// through the explicit one-sided accessors.
class PiecewiseSechState {
 public:
  PiecewiseSechState(SechPiece left, SechPiece right, double omega,
                     double lambda);

  /// Builds both pieces from half-line centers given in x units.
  static PiecewiseSechState from_centers(double omega, double lambda,
                                         int left_sign, double left_center_x,
                                         int right_sign,
                                         double right_center_x);

  const SechPiece& left() const { return left_; }
  const SechPiece& right() const { return right_; }
  double omega() const { return omega_; }
  double lambda() const { return lambda_; }
  double amplitude() const { return right_.amplitude; }
  double width() const { return right_.width; }

  double value(double x) const;
  double slope(double x) const;
  double curvature(double x) const;
  double value_at_zero(Side side) const;
  double slope_at_zero(Side side) const;

 private:
  SechPiece left_, right_;
  double omega_, lambda_;
};

/// Closed-form limit shapes that fall outside the PiecewiseSechState
/// amplitude/width coupling. The half-line signs carry the sign structure of
/// the family converging to the target (the antisymmetric family approaches
/// the odd version of its printed shape).
struct ClosedFormTarget {
  enum class Kind { Zero, ExpCusp, Soliton, HalfLineSoliton };
  enum class Notion { Strong, Weak, Distributional };

  Kind kind = Kind::Zero;
  double amplitude = 0.0;  // ExpCusp: amplitude * exp(-rate*|x|)
  double rate = 0.0;
  double a = 0.0;  // (HalfLine)Soliton: a * sech(b*(x - center_x))
  double b = 0.0;
  double center_x = 0.0;
  Side support = Side::Right;  // HalfLineSoliton only
  int left_sign = 1;
  int right_sign = 1;

  Notion notion = Notion::Strong;
  std::string escape_note;  // which coordinate escapes, for weak limits

  static ClosedFormTarget zero(Notion n, std::string escape = {});
  static ClosedFormTarget exp_cusp(double amplitude, double rate,
                                   int left_sign, int right_sign, Notion n);
  static ClosedFormTarget soliton(double a, double b, double center_x,
                                  int left_sign, int right_sign, Notion n,
                                  std::string escape = {});
  static ClosedFormTarget half_line_soliton(double a, double b, Side support,
                                            int sign, Notion n);

  double value(double x) const;  // x = 0 evaluates the right limit
  double slope(double x) const;
  double value_at_zero(Side side) const;
  double slope_at_zero(Side side) const;
};

/// Type-erased profile handed to the distance/quadrature machinery. The
/// value/slope callables are never invoked at exactly x = 0; one-sided
/// limits are stored explicitly.
struct ProfileView {
  std::function<double(double)> value;
  std::function<double(double)> slope;
  double value0_left = 0.0, value0_right = 0.0;
  double slope0_left = 0.0, slope0_right = 0.0;
  std::vector<double> breakpoints;  // interior features, always includes 0
  double tail = 1.0;  // |x| beyond which f and f' are below 1e-16 of peak
};

ProfileView make_view(const PiecewiseSechState& state);
ProfileView make_view(const ClosedFormTarget& target);
ProfileView make_view(const SechPiece& piece);  // full-line sech(A,B,C)

}  // namespace nlsdefect
