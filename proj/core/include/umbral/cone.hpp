#pragma once

#include "umbral/indefinite.hpp"

namespace umbral {

/// Lattice data (A, c1, c2), level N and shifts 0 <= a_i < 1, b of a cone
/// vertex algebra module.
struct ConeSpec {
  QuadData qd;
  long N = 1;
  Vec2 a{Rat(0), Rat(0)};
  Vec2 b{Rat(0), Rat(0)};

  /// Throws InvalidConeData when the cone constants are missing, a is out
  /// of range, or N A fails to be positive on both shifted cones.
  void validate() const;
};

/// Ways of reading the correction at a = (0, 0).
enum class CornerConvention {
  Omitted,   // no corner term
  Unscaled,  // - e^{2 pi i B(a,b)} q^{Q(a)}
  Scaled,    // - e^{2 pi i B(a,b)} q^{N Q(a)}
};

/// sum_{n1,n2 >= 0} - sum_{n1,n2 < 0} of e^{2 pi i B(n,b)} q^{N Q(n+a)}.
QSeries cone_lattice_sum(const ConeSpec& spec, const Rat& order);

/// Graded trace: the lattice sum divided by eta^2.
QSeries cone_trace(const ConeSpec& spec, const Rat& order);

/// sgn(k) e^{-2 pi i B(a,b)} / (2 eta^2) times the indefinite theta at
/// level N plus the one-dimensional rows needed when a coordinate of a
/// vanishes.
QSeries theorem32_rhs(const ConeSpec& spec, const Rat& order, CornerConvention corner = CornerConvention::Omitted);

}  // namespace umbral
