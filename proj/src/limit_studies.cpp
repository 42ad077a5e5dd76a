#include "nlsdefect/limit_studies.hpp"

#include <cmath>
#include <stdexcept>

#include "nlsdefect/distance.hpp"
#include "nlsdefect/errors.hpp"

namespace nlsdefect {
namespace {

bool toward_zero(LimitKind kind) { return kind != LimitKind::GammaToInfinity; }

std::vector<double> dyadic(int k_first, int k_last) {
  std::vector<double> out;
  const int step = k_first <= k_last ? 1 : -1;
  for (int k = k_first;; k += step) {
    out.push_back(std::ldexp(1.0, k));
    if (k == k_last) break;
  }
  return out;
}

PiecewiseSechState build_state(const StudySubject& subject, LimitKind kind,
                               const LimitContext& ctx, double p) {
  const double lambda = kind == LimitKind::LambdaToZero ? p : ctx.lambda;
  const double strength =
      kind == LimitKind::LambdaToZero ? ctx.defect_strength : p;
  if (std::holds_alternative<DeltaBranchTag>(subject))
    return delta_state_by_mass(DeltaModel(strength, lambda), ctx.rho);
  const FamilyTag tag = std::get<FamilyTag>(subject);
  const double omega = dprime_omega_from_mass(tag, strength, lambda, ctx.rho);
  return dprime_state(tag, strength, lambda, omega);
}

ClosedFormTarget build_target(const StudySubject& subject, LimitKind kind,
                              const LimitContext& ctx) {
  if (std::holds_alternative<DeltaBranchTag>(subject)) {
    const DeltaModel model(ctx.defect_strength, ctx.lambda);
    switch (kind) {
      case LimitKind::LambdaToZero:
        return delta_limit_target(model, ctx.rho, DeltaLimit::Linear);
      case LimitKind::AlphaToZero:
        return delta_limit_target(model, ctx.rho, DeltaLimit::NoDefect);
      default:
        throw UndefinedLimitError("gamma limits do not apply to the delta branch");
    }
  }
  const FamilyTag tag = std::get<FamilyTag>(subject);
  DPrimeLimit which;
  switch (kind) {
    case LimitKind::LambdaToZero:
      which = DPrimeLimit::Linear;
      break;
    case LimitKind::GammaToZero:
      which = DPrimeLimit::GammaToZero;
      break;
    case LimitKind::GammaToInfinity:
      which = DPrimeLimit::GammaToInfinity;
      break;
    default:
      throw UndefinedLimitError("alpha limits do not apply to delta-prime");
  }
  return dprime_limit_target(tag, ctx.defect_strength, ctx.lambda, ctx.rho,
                             which);
}

std::optional<double> escaping_center(const StudySubject& subject,
                                      LimitKind kind,
                                      const PiecewiseSechState& state) {
  if (std::holds_alternative<DeltaBranchTag>(subject)) return std::nullopt;
  const FamilyTag tag = std::get<FamilyTag>(subject);
  if (tag.family == Family::AsymPlus &&
      (kind == LimitKind::LambdaToZero || kind == LimitKind::GammaToInfinity)) {
    // The runaway soliton: x2 for branch +, x1 for the mirror branch.
    return tag.branch == Branch::Plus ? state.right().peak_x()
                                      : state.left().peak_x();
  }
  if (tag.family == Family::Antisym && kind == LimitKind::GammaToZero) {
    // The profile concentrates: xbar -> 0 in x units while the center in
    // width units, sqrt(w) xbar, diverges. Record the latter.
    return state.left().center;
  }
  return std::nullopt;
}

}  // namespace

std::vector<double> default_limit_sequence(const StudySubject& subject,
                                           LimitKind kind) {
  if (std::holds_alternative<DeltaBranchTag>(subject)) return dyadic(0, -10);
  const FamilyTag tag = std::get<FamilyTag>(subject);
  switch (kind) {
    case LimitKind::LambdaToZero:
      // The window sup of the weak cases decays like sqrt(lambda); start
      // deep enough that the 1e-3 threshold is reachable in 11 steps.
      if (tag.family == Family::Sym || tag.family == Family::AsymPlus)
        return dyadic(-10, -20);
      return dyadic(0, -10);
    case LimitKind::GammaToZero:
      // The distributional pairing decays like sqrt(gamma) and the scaled
      // center only logarithmically.
      if (tag.family == Family::Antisym) return dyadic(-16, -26);
      return dyadic(0, -10);
    case LimitKind::GammaToInfinity:
      if (tag.family == Family::AsymPlus) return dyadic(2, 12);
      return dyadic(0, 10);
    default:
      return dyadic(0, -10);
  }
}

LimitStudy run_limit_study(const StudySubject& subject, LimitKind kind,
                           const LimitContext& context,
                           std::span<const double> sequence) {
  if (sequence.size() < 2)
    throw std::invalid_argument("limit sequence needs at least two points");
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    const bool ok = toward_zero(kind) ? sequence[i + 1] < sequence[i]
                                      : sequence[i + 1] > sequence[i];
    if (!ok)
      throw std::invalid_argument(
          "limit sequence must be strictly monotone toward the limit");
  }

  const ClosedFormTarget target = build_target(subject, kind, context);

  LimitStudy study;
  DistanceKind metric = H1Broken{};
  switch (target.notion) {
    case ClosedFormTarget::Notion::Strong:
      if (std::holds_alternative<DeltaBranchTag>(subject)) {
        metric = H1Global{};
        study.metric = "H1_global";
      } else {
        metric = H1Broken{};
        study.metric = "H1_broken";
      }
      study.notion = "strong";
      break;
    case ClosedFormTarget::Notion::Weak:
      metric = SupOnWindow{5.0};
      study.metric = "sup_window_5";
      study.notion = "weak";
      break;
    case ClosedFormTarget::Notion::Distributional:
      study.metric = "primitive_sup_window_5";
      study.notion = "distributional";
      break;
  }
  study.notes = target.escape_note;

  const ProfileView target_view = make_view(target);
  for (double p : sequence) {
    const PiecewiseSechState state = build_state(subject, kind, context, p);
    LimitPoint point;
    point.parameter = p;
    if (target.notion == ClosedFormTarget::Notion::Distributional)
      point.distance = primitive_sup_on_window(make_view(state), 5.0);
    else
      point.distance = distance(make_view(state), target_view, metric);
    point.escaping_center = escaping_center(subject, kind, state);
    study.points.push_back(point);
  }

  bool decreasing = true;
  for (std::size_t i = 0; i + 1 < study.points.size(); ++i)
    decreasing = decreasing &&
                 study.points[i + 1].distance < study.points[i].distance;

  const LimitPoint& last = study.points.back();
  bool converged = decreasing;
  if (study.notion == "strong") {
    converged = converged &&
                last.distance <= 1e-2 * study.points.front().distance;
  } else {
    converged = converged && last.distance < 1e-3;
    if (last.escaping_center)
      converged = converged && std::abs(*last.escaping_center) > 10.0;
  }
  study.verdict = converged ? Verdict::Converged : Verdict::NotConverged;
  return study;
}

}  // namespace nlsdefect
