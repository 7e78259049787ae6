#pragma once

#include <array>
#include <optional>
#include <utility>

#include "umbral/qseries.hpp"

namespace umbral {

using Vec2 = std::array<Rat, 2>;

struct InvalidConeData : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnboundedSupport : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// A sign argument B(c, n) vanished on a summation point.
struct ZeroSign : std::domain_error {
  using std::domain_error::domain_error;
};

/// Integer symmetric form of signature (1,1) with two vectors in the
/// closure of one negative cone.
struct QuadData {
  long a11 = 1, a12 = 1, a22 = 0;
  std::array<long, 2> c1{0, 1}, c2{-1, 1};

  Rat B(const Vec2& v, const Vec2& w) const;
  Rat Q(const Vec2& v) const { return B(v, v) / 2; }
  long det() const { return a11 * a22 - a12 * a12; }

  /// Throws InvalidConeData unless det < 0, Q(c_i) <= 0 and B(c1, c2) <= 0.
  void validate() const;
  /// (k, k') when c1^T A = k (1,0) and c2^T A = k' (0,-1) with equal signs.
  std::optional<std::pair<long, long>> cone_constants() const;

  /// ((1,1),(1,0)) with c1 = (0,1), c2 = (-1,1).
  static QuadData standard();
  /// ((2m,1),(1,0)) with c1 = (0,1), c2 = (-1,2m).
  static QuadData appell_lerch(long m);
};

struct ShiftPair {
  Vec2 a{Rat(0), Rat(0)};
  Vec2 b{Rat(0), Rat(0)};
};

struct ThetaOptions {
  /// Count sgn(0) as 0 instead of rejecting the input.
  bool zero_sign_as_zero = false;
};

/// sum_{n in Z^2 + a} [sgn B(c1,n) - sgn B(c2,n)] e^{2 pi i B(n,b)} q^{N Q(n)}.
QSeries itheta_ab(const QuadData& qd, const ShiftPair& sp, long N, const Rat& order, ThetaOptions opt = {});

/// sum_{n in Z^2} [sgn B(c1,n+a) - sgn B(c2,n+a)] e^{2 pi i B(z,n)} q'^{Q(n)}
/// at z = a tau' + b, tau' = N tau.
QSeries itheta_z(const QuadData& qd, const ShiftPair& z, long N, const Rat& order, ThetaOptions opt = {});

/// sgn B(c1,n) - sgn B(c2,n).
long cone_sign(const QuadData& qd, const Vec2& n, ThetaOptions opt = {});

}  // namespace umbral
