#include "nlsdefect/profiles.hpp"

#include <cmath>
#include <stdexcept>

namespace nlsdefect {

double sech(double u) {
  // 2 e^{-|u|} / (1 + e^{-2|u|}) never overflows and underflows cleanly.
  const double e = std::exp(-std::abs(u));
  return 2.0 * e / (1.0 + e * e);
}

double SechPiece::value(double x) const {
  return sign * amplitude * sech(width * x - center);
}

double SechPiece::slope(double x) const {
  const double u = width * x - center;
  const double s = sech(u);
  return -sign * amplitude * width * s * std::tanh(u);
}

double SechPiece::curvature(double x) const {
  const double u = width * x - center;
  const double s = sech(u);
  return sign * amplitude * width * width * (s - 2.0 * s * s * s);
}

namespace {

void check_piece(const SechPiece& p, double omega, double lambda,
                 const char* which) {
  if (p.sign != 1.0 && p.sign != -1.0)
    throw std::invalid_argument(std::string(which) + " piece sign must be +-1");
  const double a = std::sqrt(2.0 * omega / lambda);
  const double b = std::sqrt(omega);
  if (!(p.amplitude > 0.0) || std::abs(p.amplitude - a) > 1e-12 * a)
    throw std::invalid_argument(std::string(which) +
                                " piece amplitude violates A = sqrt(2w/l)");
  if (!(p.width > 0.0) || std::abs(p.width - b) > 1e-12 * b)
    throw std::invalid_argument(std::string(which) +
                                " piece width violates B = sqrt(w)");
}

}  // namespace

PiecewiseSechState::PiecewiseSechState(SechPiece left, SechPiece right,
                                       double omega, double lambda)
    : left_(left), right_(right), omega_(omega), lambda_(lambda) {
  if (!(omega > 0.0) || !(lambda > 0.0))
    throw std::invalid_argument("omega and lambda must be positive");
  check_piece(left_, omega, lambda, "left");
  check_piece(right_, omega, lambda, "right");
}

PiecewiseSechState PiecewiseSechState::from_centers(double omega, double lambda,
                                                    int left_sign,
                                                    double left_center_x,
                                                    int right_sign,
                                                    double right_center_x) {
  const double a = std::sqrt(2.0 * omega / lambda);
  const double b = std::sqrt(omega);
  SechPiece left{static_cast<double>(left_sign), a, b, b * left_center_x};
  SechPiece right{static_cast<double>(right_sign), a, b, b * right_center_x};
  return PiecewiseSechState(left, right, omega, lambda);
}

double PiecewiseSechState::value(double x) const {
  return x < 0.0 ? left_.value(x) : right_.value(x);
}

double PiecewiseSechState::slope(double x) const {
  return x < 0.0 ? left_.slope(x) : right_.slope(x);
}

double PiecewiseSechState::curvature(double x) const {
  return x < 0.0 ? left_.curvature(x) : right_.curvature(x);
}

double PiecewiseSechState::value_at_zero(Side side) const {
  return side == Side::Left ? left_.value(0.0) : right_.value(0.0);
}

double PiecewiseSechState::slope_at_zero(Side side) const {
  return side == Side::Left ? left_.slope(0.0) : right_.slope(0.0);
}

ClosedFormTarget ClosedFormTarget::zero(Notion n, std::string escape) {
  ClosedFormTarget t;
  t.kind = Kind::Zero;
  t.notion = n;
  t.escape_note = std::move(escape);
  return t;
}

ClosedFormTarget ClosedFormTarget::exp_cusp(double amplitude, double rate,
                                            int left_sign, int right_sign,
                                            Notion n) {
  ClosedFormTarget t;
  t.kind = Kind::ExpCusp;
  t.amplitude = amplitude;
  t.rate = rate;
  t.left_sign = left_sign;
  t.right_sign = right_sign;
  t.notion = n;
  return t;
}

ClosedFormTarget ClosedFormTarget::soliton(double a, double b, double center_x,
                                           int left_sign, int right_sign,
                                           Notion n, std::string escape) {
  ClosedFormTarget t;
  t.kind = Kind::Soliton;
  t.a = a;
  t.b = b;
  t.center_x = center_x;
  t.left_sign = left_sign;
  t.right_sign = right_sign;
  t.notion = n;
  t.escape_note = std::move(escape);
  return t;
}

ClosedFormTarget ClosedFormTarget::half_line_soliton(double a, double b,
                                                     Side support, int sign,
                                                     Notion n) {
  ClosedFormTarget t;
  t.kind = Kind::HalfLineSoliton;
  t.a = a;
  t.b = b;
  t.support = support;
  t.left_sign = sign;
  t.right_sign = sign;
  t.notion = n;
  return t;
}

namespace {

double side_sign(const ClosedFormTarget& t, double x) {
  return x < 0.0 ? static_cast<double>(t.left_sign)
                 : static_cast<double>(t.right_sign);
}

bool on_support(const ClosedFormTarget& t, double x) {
  if (t.kind != ClosedFormTarget::Kind::HalfLineSoliton) return true;
  return t.support == Side::Left ? x <= 0.0 : x >= 0.0;
}

}  // namespace

double ClosedFormTarget::value(double x) const {
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::ExpCusp:
      return side_sign(*this, x) * amplitude * std::exp(-rate * std::abs(x));
    case Kind::Soliton:
      return side_sign(*this, x) * a * sech(b * (x - center_x));
    case Kind::HalfLineSoliton:
      return on_support(*this, x) ? side_sign(*this, x) * a * sech(b * x) : 0.0;
  }
  return 0.0;
}

double ClosedFormTarget::slope(double x) const {
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::ExpCusp: {
      const double d = x < 0.0 ? rate : -rate;
      return side_sign(*this, x) * amplitude * d * std::exp(-rate * std::abs(x));
    }
    case Kind::Soliton: {
      const double u = b * (x - center_x);
      const double s = sech(u);
      return -side_sign(*this, x) * a * b * s * std::tanh(u);
    }
    case Kind::HalfLineSoliton: {
      if (!on_support(*this, x)) return 0.0;
      const double s = sech(b * x);
      return -side_sign(*this, x) * a * b * s * std::tanh(b * x);
    }
  }
  return 0.0;
}

double ClosedFormTarget::value_at_zero(Side side) const {
  const double x = side == Side::Left ? -1.0 : 1.0;  // sign carrier only
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::ExpCusp:
      return side_sign(*this, x) * amplitude;
    case Kind::Soliton:
      return side_sign(*this, x) * a * sech(b * center_x);
    case Kind::HalfLineSoliton: {
      const bool inside = (support == Side::Left) == (side == Side::Left);
      return inside ? side_sign(*this, x) * a : 0.0;
    }
  }
  return 0.0;
}

double ClosedFormTarget::slope_at_zero(Side side) const {
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::ExpCusp: {
      const double sgn =
          side == Side::Left ? static_cast<double>(left_sign) : static_cast<double>(right_sign);
      const double d = side == Side::Left ? rate : -rate;
      return sgn * amplitude * d;
    }
    case Kind::Soliton: {
      const double sgn =
          side == Side::Left ? static_cast<double>(left_sign) : static_cast<double>(right_sign);
      const double u = -b * center_x;
      return -sgn * a * b * sech(u) * std::tanh(u);
    }
    case Kind::HalfLineSoliton:
      return 0.0;  // peak at x = 0 on the supported side, zero elsewhere
  }
  return 0.0;
}

namespace {

constexpr double kTailLog = 40.0;  // sech/exp tails < 1e-16 of peak beyond this

double piece_tail(const SechPiece& p) {
  return std::abs(p.peak_x()) + kTailLog / p.width;
}

}  // namespace

ProfileView make_view(const PiecewiseSechState& state) {
  ProfileView v;
  v.value = [state](double x) { return state.value(x); };
  v.slope = [state](double x) { return state.slope(x); };
  v.value0_left = state.value_at_zero(Side::Left);
  v.value0_right = state.value_at_zero(Side::Right);
  v.slope0_left = state.slope_at_zero(Side::Left);
  v.slope0_right = state.slope_at_zero(Side::Right);
  v.breakpoints = {0.0};
  const double pl = state.left().peak_x();
  const double pr = state.right().peak_x();
  if (pl < 0.0) v.breakpoints.push_back(pl);
  if (pr > 0.0) v.breakpoints.push_back(pr);
  v.tail = std::max(piece_tail(state.left()), piece_tail(state.right()));
  return v;
}

ProfileView make_view(const ClosedFormTarget& target) {
  ProfileView v;
  v.value = [target](double x) { return target.value(x); };
  v.slope = [target](double x) { return target.slope(x); };
  v.value0_left = target.value_at_zero(Side::Left);
  v.value0_right = target.value_at_zero(Side::Right);
  v.slope0_left = target.slope_at_zero(Side::Left);
  v.slope0_right = target.slope_at_zero(Side::Right);
  v.breakpoints = {0.0};
  switch (target.kind) {
    case ClosedFormTarget::Kind::Zero:
      v.tail = 0.0;
      break;
    case ClosedFormTarget::Kind::ExpCusp:
      v.tail = kTailLog / target.rate;
      break;
    case ClosedFormTarget::Kind::Soliton:
      if (target.center_x != 0.0) v.breakpoints.push_back(target.center_x);
      v.tail = std::abs(target.center_x) + kTailLog / target.b;
      break;
    case ClosedFormTarget::Kind::HalfLineSoliton:
      v.tail = kTailLog / target.b;
      break;
  }
  return v;
}

ProfileView make_view(const SechPiece& piece) {
  ProfileView v;
  v.value = [piece](double x) { return piece.value(x); };
  v.slope = [piece](double x) { return piece.slope(x); };
  v.value0_left = v.value0_right = piece.value(0.0);
  v.slope0_left = v.slope0_right = piece.slope(0.0);
  v.breakpoints = {0.0, piece.peak_x()};
  v.tail = piece_tail(piece);
  return v;
}

}  // namespace nlsdefect
