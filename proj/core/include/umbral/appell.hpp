#pragma once

#include "umbral/jacobi.hpp"

namespace umbral {

/// A point z = a tau' + b.
struct Point {
  Rat a;
  Rat b;
};

/// mu(z1, z2; tau') at tau' = scale tau. Requires 0 < a1 < 1 and
/// 0 <= a2 - a1 + 1/2 < 1.
QSeries mu(const Point& z1, const Point& z2, const Rat& scale, const Rat& order);

/// The same function through the indefinite theta of the form ((1,1),(1,0)).
QSeries mu_via_theta(const Point& z1, const Point& z2, long N, const Rat& order);
/// The same function through a cone trace at level N.
QSeries mu_via_cone(const Point& z1, const Point& z2, long N, const Rat& order);

/// mu_{m,0}(z, tau') at tau' = scale tau, 0 < |a| < 1. Computed from the
/// geometric expansion and from the indefinite theta of ((2m,1),(1,0));
/// throws std::logic_error if the two disagree.
QSeries mu_m0(long m, const Point& z, const Rat& scale, const Rat& order);
/// Only the geometric expansion.
QSeries mu_m0_direct(long m, const Point& z, const Rat& scale, const Rat& order);
/// Only the indefinite theta, -Theta((z, 0); tau').
QSeries mu_m0_theta(long m, const Point& z, long N, const Rat& order);
/// Through a cone trace at level N.
QSeries mu_m0_via_cone(long m, const Point& z, long N, const Rat& order);

/// mu_{m,0}(z, tau) with y symbolic, expanded in the given strip (Lower:
/// -1 < a < 0, Upper: 0 < a < 1) on the y window [lo2/2, hi2/2].
JacobiSeries mu_m0_jacobi(long m, Strip strip, int lo2, int hi2, const Rat& order);

/// (mu_{m,0}(z, tau) + (-1)^k mu_{m,0}(z, tau + 1/2)) / 2, the shifted leg
/// taken term by term on the specialized series.
QSeries mu_m0_halfshift(long m, int k, const Point& z, const Rat& scale, const Rat& order);

}  // namespace umbral
