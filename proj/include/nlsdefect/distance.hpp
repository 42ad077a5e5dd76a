#pragma once

#include <variant>

#include "nlsdefect/profiles.hpp"

namespace nlsdefect {

struct H1Global {};  // full-line H1 norm of the difference; needs continuity at 0
struct H1Broken {};  // H1(R+) + H1(R-) norm, a jump at 0 is allowed
struct SupOnWindow {
  double radius = 5.0;  // max |difference| over [-radius, radius]
};
using DistanceKind = std::variant<H1Global, H1Broken, SupOnWindow>;

double distance(const ProfileView& f, const ProfileView& g,
                const DistanceKind& metric);

template <class F, class G>
double distance(const F& f, const G& g, const DistanceKind& metric) {
  return distance(make_view(f), make_view(g), metric);
}

/// Sup over [-radius, radius] of the primitive x -> integral of f from
/// -radius to x. Certifies convergence in the sense of distributions for
/// profiles that concentrate at the origin, where the pointwise sup diverges.
double primitive_sup_on_window(const ProfileView& f, double radius);

}  // namespace nlsdefect
