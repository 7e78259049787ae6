#pragma once

#include <array>

#include "umbral/jacobi.hpp"

namespace umbral {

struct ExtractionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Independent ways of building the y-expansion of sum_r H_r theta_{4,r}
/// for class 3A at Coxeter number 4, all in the strip 0 < -Im z < Im tau.
enum class ExtractionRoute {
  /// theta_1 quotient plus twice the geometric expansion of mu_{4,0}.
  AppellLerch,
  /// theta_1 quotient minus twice the indefinite theta lattice sum.
  IndefiniteTheta,
  /// Clifford and Weyl characters minus twice the cone sum.
  Characters,
};

/// 2i eta^3 theta_1(6z, 3tau) / (theta_1(z, tau) theta_1(3z, 3tau)) from
/// theta_1 products, and the same function from twisted Clifford and Weyl
/// characters.
JacobiSeries psi_3a_theta(int lo2, int hi2, const Rat& order);
JacobiSeries psi_3a_characters(int lo2, int hi2, const Rat& order);

/// Theta^+ of ((8,1),(1,0)), c1 = (0,1), c2 = (-1,8) at (z, 0) in the lower
/// strip: by the sign function on Z^2, and as a signed sum over two cones.
JacobiSeries theta_plus_lattice(int lo2, int hi2, const Rat& order);
JacobiSeries theta_plus_cone(int lo2, int hi2, const Rat& order);

/// The full two-variable series on a given y window.
JacobiSeries h4_3a_generating(ExtractionRoute route, int lo2, int hi2, const Rat& order);

struct H43aComponents {
  std::array<QSeries, 3> h;  // h[r - 1] = H_{3A, r}
  int window = 0;            // y window half-width at which the columns settled
};

/// Reads H_{3A,r}, r = 1, 2, 3, off the y^r columns. The window starts at
/// |y| <= 16 and doubles until two consecutive windows agree; the y^{-r}
/// columns must be the negatives of the y^r ones and every coefficient
/// an even integer. Results are cached per route and order.
H43aComponents h4_3a_components(ExtractionRoute route, const Rat& order);
QSeries h4_3a_extract(int r, const Rat& order, ExtractionRoute route = ExtractionRoute::Characters);

}  // namespace umbral
