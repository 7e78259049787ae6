#include "umbral/cone.hpp"

#include "detail/quadrant.hpp"
#include "umbral/modular.hpp"

namespace umbral {

namespace {

const Rat kEtaLead = ratio(1, 12);

QSeries over_eta_squared(const QSeries& lattice, const Rat& order) {
  return (lattice * eta_quotient({{1, -2}}, order)).truncate(order);
}

// sum over x = (x1 fixed, x2 in a2 + Z) or the transposed row
QSeries theta_row(const ConeSpec& s, int fixed, const Rat& order) {
  SeriesBuilder sb;
  const int free = 1 - fixed;
  const long diag = free == 0 ? s.qd.a11 : s.qd.a22;
  const Rat bound = order / s.N;
  for (int dir : {1, -1}) {
    // |x_free| grows from the first lattice value on this side
    Rat t = dir > 0 ? s.a[free] : frac_part(-s.a[free]);
    if (dir < 0 && t == 0) t = 1;
    for (;; t += 1) {
      Vec2 x{Rat(0), Rat(0)};
      x[free] = Rat(dir) * t;
      if (Rat(diag) * t * t / 2 >= bound) break;
      sb.add(Rat(s.N) * s.qd.Q(x), frac_part(s.qd.B(x, s.b)), 1);
    }
  }
  return sb.finish(order);
}

}  // namespace

void ConeSpec::validate() const {
  qd.validate();
  if (!qd.cone_constants()) throw InvalidConeData("cone vectors do not satisfy c1^T A = k(1,0), c2^T A = k'(0,-1)");
  if (N <= 0) throw InvalidConeData("level must be positive");
  for (const Rat& x : a) {
    if (x < 0 || x >= 1) throw InvalidConeData("cone shift must satisfy 0 <= a_i < 1");
  }
  // extreme rays e1, e2 of the cone, then the boundary rows through the shift
  if (qd.a11 < 0 || qd.a22 < 0 || qd.a12 <= 0) {
    throw InvalidConeData("N A is not positive on the shifted cones");
  }
  if ((a[0] == 0 && qd.a22 == 0) || (a[1] == 0 && qd.a11 == 0)) {
    throw InvalidConeData("a boundary row of the shifted cone has zero norm");
  }
}

QSeries cone_lattice_sum(const ConeSpec& s, const Rat& order) {
  s.validate();
  SeriesBuilder sb;
  const Rat bound = order / s.N;
  const Rat alpha(s.qd.a11), beta(s.qd.a12), gamma(s.qd.a22);
  // n >= 0: x = n + a; n < 0: -x = -n - a with -n_i >= 1
  detail::scan_quadrant(alpha, beta, gamma, s.a[0], s.a[1], bound, [&](const Rat& u, const Rat& v) {
    const Vec2 x{u, v};
    const Vec2 n{u - s.a[0], v - s.a[1]};
    sb.add(Rat(s.N) * s.qd.Q(x), frac_part(s.qd.B(n, s.b)), 1);
  });
  detail::scan_quadrant(alpha, beta, gamma, 1 - s.a[0], 1 - s.a[1], bound, [&](const Rat& u, const Rat& v) {
    const Vec2 x{-u, -v};
    const Vec2 n{-u - s.a[0], -v - s.a[1]};
    sb.add(Rat(s.N) * s.qd.Q(x), frac_part(s.qd.B(n, s.b)), -1);
  });
  return sb.finish(order);
}

QSeries cone_trace(const ConeSpec& s, const Rat& order) {
  return over_eta_squared(cone_lattice_sum(s, order + kEtaLead), order);
}

QSeries theorem32_rhs(const ConeSpec& s, const Rat& order, CornerConvention corner) {
  s.validate();
  const Rat work = order + kEtaLead;
  const long k = s.qd.cone_constants()->first;
  QSeries bracket = itheta_ab(s.qd, ShiftPair{s.a, s.b}, s.N, work, {true});
  if (s.a[0] == 0) bracket += theta_row(s, 0, work);
  if (s.a[1] == 0) bracket += theta_row(s, 1, work);
  if (s.a[0] == 0 && s.a[1] == 0 && corner != CornerConvention::Omitted) {
    const Rat e = corner == CornerConvention::Scaled ? Rat(s.N) * s.qd.Q(s.a) : s.qd.Q(s.a);
    bracket -= QSeries::monomial(e, turn(s.qd.B(s.a, s.b)), work);
  }
  const CycNum pre = turn(-s.qd.B(s.a, s.b)) * CycNum(ratio(k > 0 ? 1 : -1, 2));
  return over_eta_squared(bracket.scaled(pre), order);
}

}  // namespace umbral
