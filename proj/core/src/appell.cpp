#include "umbral/appell.hpp"

#include <cmath>

#include "umbral/cone.hpp"
#include "umbral/modular.hpp"

namespace umbral {

namespace {

void check_strip(const Point& z1, const Point& z2) {
  if (!(z1.a > 0 && z1.a < 1)) throw StripViolation("mu needs 0 < Im(z1)/Im(tau) < 1");
  const Rat t = z2.a - z1.a + ratio(1, 2);
  if (!(t >= 0 && t < 1)) throw StripViolation("mu needs 0 <= Im(z2 - z1)/Im(tau) + 1/2 < 1");
}

void check_m0(long m, const Point& z) {
  if (m <= 0) throw std::invalid_argument("mu_{m,0} needs m > 0");
  if (z.a == 0 || abs(z.a) >= 1) throw StripViolation("mu_{m,0} needs 0 < |Im(z)/Im(tau)| < 1");
}

// (a, b) data of the cone / indefinite theta attached to (z1, z2)
ShiftPair lattice_shift(const Point& z1, const Point& z2) {
  const Rat h = ratio(1, 2);
  return ShiftPair{{z1.a, z2.a - z1.a + h}, {z1.b, z2.b - z1.b + h}};
}

// sum over n of (-1)^n y2^n q^{n(n+1)/2} / (1 - y1 q^n), each fraction
// expanded in whichever of y1 q^n, (y1 q^n)^{-1} is small; 0 < a1 < 1
QSeries mu_numerator(const Point& z1, const Point& z2, const Rat& v) {
  SeriesBuilder sb;
  auto base = [&](long n) -> Rat { return ratio(n * (n + 1), 2) + z2.a * n; };
  for (int side : {1, -1}) {
    for (long n = side > 0 ? 0 : -1;; n += side) {
      const Rat step = side > 0 ? Rat(z1.a + n) : Rat(-(z1.a + n));  // > 0
      const Rat first = base(n) + (side > 0 ? Rat(0) : step);
      const Rat vertex = -(z2.a + ratio(1, 2)) - Rat(side > 0 ? 0 : -1);
      // stop once past the vertex of the row minimum and above the horizon
      if (first >= v && Rat(n) * side > vertex * side) break;
      const Rat sign_turn = n % 2 ? ratio(1, 2) : Rat(0);
      for (long l = side > 0 ? 0 : 1;; ++l) {
        const Rat e = base(n) + step * l;
        if (e >= v) break;
        const Rat t = sign_turn + z2.b * n + z1.b * (side > 0 ? l : -l);
        sb.add(e, frac_part(t), side);
      }
    }
  }
  return sb.finish(v);
}

}  // namespace

QSeries mu(const Point& z1, const Point& z2, const Rat& scale, const Rat& order) {
  check_strip(z1, z2);
  if (scale <= 0) throw std::invalid_argument("scale must be positive");
  const Rat target = order / scale;
  QSeries r = ensure_order(
      [&](const Rat& w) {
        QSeries th = theta_ab(z2.a, z2.b, 1, w);
        if (th.is_zero()) throw NotAUnit("theta(z2) vanishes identically");
        QSeries num = mu_numerator(z1, z2, w);
        return (num * th.inverse()).shift(z1.a / 2).scaled(turn(z1.b / 2));
      },
      target);
  return r.rescale(scale);
}

QSeries mu_via_theta(const Point& z1, const Point& z2, long N, const Rat& order) {
  check_strip(z1, z2);
  const ShiftPair sp = lattice_shift(z1, z2);
  const QuadData qd = QuadData::standard();
  return ensure_order(
      [&](const Rat& w) {
        QSeries th = theta_ab(z2.a, z2.b, N, w);
        QSeries it = itheta_ab(qd, sp, N, w);
        return (it * th.inverse())
            .shift(Rat(N) * (z1.a / 2 - qd.Q(sp.a)))
            .scaled(turn(z1.b / 2 - qd.B(sp.a, sp.b)) * CycNum(ratio(1, 2)));
      },
      order);
}

QSeries mu_via_cone(const Point& z1, const Point& z2, long N, const Rat& order) {
  check_strip(z1, z2);
  const ShiftPair sp = lattice_shift(z1, z2);
  const ConeSpec cs{QuadData::standard(), N, sp.a, sp.b};
  return ensure_order(
      [&](const Rat& w) {
        QSeries th = theta_ab(z2.a, z2.b, N, w);
        QSeries t = cone_trace(cs, w) * eta_quotient({{1, 2}}, w);
        return (t * th.inverse()).shift(Rat(N) * (z1.a / 2 - cs.qd.Q(sp.a))).scaled(turn(z1.b / 2));
      },
      order);
}

QSeries mu_m0_direct(long m, const Point& z, const Rat& scale, const Rat& order) {
  check_m0(m, z);
  if (scale <= 0) throw std::invalid_argument("scale must be positive");
  const Rat v = order / scale;
  SeriesBuilder sb;
  // y^{2km} q^{mk^2} (1 + X)/(X - 1) with X = y q^k:
  //   a + k > 0: -(1 + 2 sum_{l>=1} X^l);  a + k < 0: 1 + 2 sum_{l>=1} X^{-l}
  for (int side : {1, -1}) {
    for (long k = side > 0 ? 0 : -1;; k += side) {
      const Rat xe = z.a + k;
      const bool small = xe > 0;
      const Rat step = small ? xe : Rat(-xe);
      const Rat e0 = Rat(m * k * k) + Rat(2 * m * k) * z.a;
      // the prefactor exponent is a parabola in k with vertex at -a
      if (e0 >= v && Rat(k) * side > -z.a * side) break;
      const Rat t0 = Rat(2 * m * k) * z.b;
      const long sign = small ? -1 : 1;
      for (long l = 0;; ++l) {
        const Rat e = e0 + step * l;
        if (e >= v) break;
        const Rat t = t0 + z.b * (small ? l : -l);
        sb.add(e, frac_part(t), sign * (l == 0 ? 1 : 2));
      }
    }
  }
  return sb.finish(v).rescale(scale);
}

QSeries mu_m0_theta(long m, const Point& z, long N, const Rat& order) {
  check_m0(m, z);
  const ShiftPair sp{{z.a, 0}, {z.b, 0}};
  return -itheta_z(QuadData::appell_lerch(m), sp, N, order, {true});
}

QSeries mu_m0(long m, const Point& z, const Rat& scale, const Rat& order) {
  QSeries direct = mu_m0_direct(m, z, scale, order);
  const Rat level = scale;
  if (level.get_den() == 1) {
    Verdict v = qs_equal(direct, mu_m0_theta(m, z, level.get_num().get_si(), order));
    if (!v.equal) throw std::logic_error("mu_{m,0} expansions disagree at q^" + rat_string(v.exponent));
  } else {
    const QSeries th = mu_m0_theta(m, z, 1, order / scale).rescale(scale);
    Verdict v = qs_equal(direct, th);
    if (!v.equal) throw std::logic_error("mu_{m,0} expansions disagree at q^" + rat_string(v.exponent));
  }
  return direct;
}

QSeries mu_m0_via_cone(long m, const Point& z, long N, const Rat& order) {
  check_m0(m, z);
  const bool upper = z.a > 0;
  const ConeSpec cs{QuadData::appell_lerch(m), N, {upper ? z.a : 1 + z.a, 0}, {z.b, 0}};
  const CycNum f = upper ? CycNum(1L) : turn(Rat(2 * m) * z.b);
  const Rat lead = Rat(m * N) * z.a * z.a;
  QSeries t = (cone_trace(cs, order + lead) * eta_quotient({{1, 2}}, order + lead)).shift(-lead);
  SeriesBuilder sb;
  // n in Z + a: N m n^2 - N m a^2, phase 2 m n b - 2 m a b
  for (int side : {1, -1}) {
    for (long k = side > 0 ? 0 : -1;; k += side) {
      const Rat n = z.a + k;
      const Rat e = Rat(N * m) * n * n - lead;
      if (e >= order) break;
      sb.add(e, frac_part(Rat(2 * m) * (n - z.a) * z.b), 1);
    }
  }
  return (t.scaled(f * CycNum(-2L)) + sb.finish(order)).truncate(order);
}

JacobiSeries mu_m0_jacobi(long m, Strip strip, int lo2, int hi2, const Rat& order) {
  if (m <= 0) throw std::invalid_argument("mu_{m,0} needs m > 0");
  if (strip == Strip::None) throw std::invalid_argument("mu_{m,0} needs an expansion strip");
  // with z = a tau, y q^k is small exactly when k > -a, i.e. k >= 1 in the
  // lower strip and k >= 0 in the upper one
  const long first_small = strip == Strip::Lower ? 1 : 0;
  const long kmax = static_cast<long>(std::sqrt(std::max(0.0, order.get_d()) / m)) + 1;
  const int lmin = (lo2 - 1) / 2, lmax = (hi2 + 1) / 2;
  JacobiBuilder jb;
  for (long k = -kmax; k <= kmax; ++k) {
    const Rat e0(m * k * k);
    if (e0 >= order) continue;
    const bool small = k >= first_small;
    const long y0 = 2 * m * k;
    const long dir = small ? 1 : -1;
    for (long l = 0;; ++l) {
      const long y = y0 + dir * l;
      const Rat e = e0 + Rat(k * dir * l);
      if (e >= order || y < lmin || y > lmax) break;
      jb.add(static_cast<int>(2 * y), e, 0, (small ? -1 : 1) * (l == 0 ? 1 : 2));
    }
  }
  JacobiSeries j = jb.finish(lo2, hi2, order);
  return j.tag(strip);
}

QSeries mu_m0_halfshift(long m, int k, const Point& z, const Rat& scale, const Rat& order) {
  if (k != 0 && k != 1) throw std::invalid_argument("half-shift index must be 0 or 1");
  const QSeries base = mu_m0(m, z, scale, order);
  const QSeries moved = base.tphase(ratio(1, 2));
  return (k == 0 ? base + moved : base - moved).scaled(ratio(1, 2));
}

}  // namespace umbral
