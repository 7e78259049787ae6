#pragma once

#include <functional>

#include "umbral/cyclotomic.hpp"

namespace umbral::detail {

struct UnboundedQuadrant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Visits every (u, v) with u in u0 + Z_{>=0}, v in v0 + Z_{>=0} and
/// (alpha u^2 + 2 beta u v + gamma v^2) / 2 < bound. Rows in u are cut
/// exactly; the outer loop stops once the row minimum, which is
/// nondecreasing in u under the checked conditions, reaches the bound.
inline void scan_quadrant(const Rat& alpha, const Rat& beta, const Rat& gamma, const Rat& u0, const Rat& v0,
                          const Rat& bound, const std::function<void(const Rat&, const Rat&)>& visit) {
  auto form = [&](const Rat& u, const Rat& v) -> Rat { return (alpha * u * u + 2 * beta * u * v + gamma * v * v) / 2; };
  if (alpha == 0 && gamma > 0) {
    scan_quadrant(gamma, beta, alpha, v0, u0, bound, [&](const Rat& v, const Rat& u) { visit(u, v); });
    return;
  }
  if (gamma < 0 || beta < 0) throw UnboundedQuadrant("quadratic form is not bounded below on the cone");
  if (alpha < 0 || (alpha == 0 && (beta == 0 || v0 == 0))) {
    throw UnboundedQuadrant("quadratic form does not grow along the first cone direction");
  }
  for (Rat u = u0;; u += 1) {
    // row minimum sits at v = v0 because beta >= 0 and gamma >= 0
    if (form(u, v0) >= bound) break;
    if (gamma == 0 && beta * u == 0) throw UnboundedQuadrant("a line of the cone carries constant exponent");
    // strictly increasing in v from here
    for (Rat v = v0; form(u, v) < bound; v += 1) visit(u, v);
  }
}

}  // namespace umbral::detail
