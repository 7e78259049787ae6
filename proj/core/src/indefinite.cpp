#include "umbral/indefinite.hpp"

#include "detail/quadrant.hpp"

namespace umbral {

namespace {

Vec2 to_vec(const std::array<long, 2>& c) { return {Rat(c[0]), Rat(c[1])}; }

int sign_of(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

// Cusp vectors c (Q(c) = 0) need B(a, c) outside Z, otherwise a whole
// line of summation points has B(c, n) = 0.
void check_cusps(const QuadData& qd, const Vec2& a, ThetaOptions opt) {
  if (opt.zero_sign_as_zero) return;
  for (const auto& c : {qd.c1, qd.c2}) {
    const Vec2 cv = to_vec(c);
    if (qd.Q(cv) != 0) continue;
    const Rat t = qd.B(a, cv);
    if (t.get_den() == 1) throw ZeroSign("shift lies on a cusp line: B(a, c) is an integer");
  }
}

constexpr long kMaxBox = 1L << 11;

// Box enumeration grown by shells; stops after two consecutive shells add
// nothing below the bound.
void scan_box(const std::function<bool(long, long)>& visit) {
  long silent = 0;
  long inner = -1;
  for (long M = 8; M <= kMaxBox; M *= 2) {
    bool hit = false;
    for (long i = -M; i <= M; ++i) {
      for (long j = -M; j <= M; ++j) {
        if (std::max(std::labs(i), std::labs(j)) <= inner) continue;
        hit = visit(i, j) || hit;
      }
    }
    silent = hit ? 0 : silent + 1;
    if (silent >= 2) return;
    inner = M;
  }
  throw UnboundedSupport("lattice terms below the requested order keep appearing far from the origin");
}

}  // namespace

Rat QuadData::B(const Vec2& v, const Vec2& w) const {
  return Rat(a11) * v[0] * w[0] + Rat(a12) * (v[0] * w[1] + v[1] * w[0]) + Rat(a22) * v[1] * w[1];
}

void QuadData::validate() const {
  if (det() >= 0) throw InvalidConeData("quadratic form must have signature (1,1)");
  const Vec2 u = to_vec(c1), w = to_vec(c2);
  if ((c1[0] == 0 && c1[1] == 0) || (c2[0] == 0 && c2[1] == 0)) throw InvalidConeData("cone vectors must be nonzero");
  if (Q(u) > 0 || Q(w) > 0) throw InvalidConeData("cone vectors must satisfy Q(c) <= 0");
  if (B(u, w) > 0) throw InvalidConeData("cone vectors lie in opposite components");
}

std::optional<std::pair<long, long>> QuadData::cone_constants() const {
  // c^T A = (a11 c_0 + a12 c_1, a12 c_0 + a22 c_1)
  const long k = a11 * c1[0] + a12 * c1[1];
  const long k1 = a12 * c1[0] + a22 * c1[1];
  const long m0 = a11 * c2[0] + a12 * c2[1];
  const long kp = -(a12 * c2[0] + a22 * c2[1]);
  if (k1 != 0 || m0 != 0 || k == 0 || kp == 0 || (k > 0) != (kp > 0)) return std::nullopt;
  return std::make_pair(k, kp);
}

QuadData QuadData::standard() { return QuadData{1, 1, 0, {0, 1}, {-1, 1}}; }

QuadData QuadData::appell_lerch(long m) { return QuadData{2 * m, 1, 0, {0, 1}, {-1, 2 * m}}; }

long cone_sign(const QuadData& qd, const Vec2& n, ThetaOptions opt) {
  const int s1 = sign_of(qd.B(to_vec(qd.c1), n));
  const int s2 = sign_of(qd.B(to_vec(qd.c2), n));
  if ((s1 == 0 || s2 == 0) && !opt.zero_sign_as_zero) {
    throw ZeroSign("sign argument vanishes at a summation point");
  }
  return s1 - s2;
}

QSeries itheta_ab(const QuadData& qd, const ShiftPair& sp, long N, const Rat& order, ThetaOptions opt) {
  qd.validate();
  if (N <= 0) throw std::invalid_argument("theta scale must be positive");
  check_cusps(qd, sp.a, opt);
  const Rat bound = order / N;
  SeriesBuilder sb;
  auto add = [&](const Vec2& n) {
    const long w = cone_sign(qd, n, opt);
    if (w != 0) sb.add(Rat(N) * qd.Q(n), frac_part(qd.B(n, sp.b)), w);
  };
  if (qd.cone_constants()) {
    // support is the two closed quadrants s n_i >= 0
    for (int s : {1, -1}) {
      const Rat u0 = frac_part(Rat(s) * sp.a[0]), v0 = frac_part(Rat(s) * sp.a[1]);
      try {
        detail::scan_quadrant(Rat(qd.a11), Rat(qd.a12), Rat(qd.a22), u0, v0, bound, [&](const Rat& u, const Rat& v) {
          if (s < 0 && u == 0 && v == 0) return;
          add(Vec2{Rat(s) * u, Rat(s) * v});
        });
      } catch (const detail::UnboundedQuadrant& e) {
        throw UnboundedSupport(e.what());
      }
    }
  } else {
    scan_box([&](long i, long j) {
      const Vec2 n{sp.a[0] + i, sp.a[1] + j};
      const long w = cone_sign(qd, n, opt);
      if (w == 0 || Rat(N) * qd.Q(n) >= order) return false;
      add(n);
      return true;
    });
  }
  return sb.finish(order);
}

QSeries itheta_z(const QuadData& qd, const ShiftPair& z, long N, const Rat& order, ThetaOptions opt) {
  qd.validate();
  if (N <= 0) throw std::invalid_argument("theta scale must be positive");
  check_cusps(qd, z.a, opt);
  // integer arithmetic over the common denominator D of a:
  // 2 D (Q(n) + B(a,n)) and D B(c, n + a) are integers
  const long D = lcm_int(static_cast<int>(z.a[0].get_den().get_si()), static_cast<int>(z.a[1].get_den().get_si()));
  const long A0 = Rat(z.a[0] * D).get_num().get_si(), A1 = Rat(z.a[1] * D).get_num().get_si();
  const Int limit = ceil_rat(Rat(2 * D) * order / N);  // keep 2 D e < limit
  if (!limit.fits_slong_p()) throw std::overflow_error("order too large for lattice enumeration");
  const long lim = limit.get_si();
  auto lin = [&](const std::array<long, 2>& c, long x0, long x1) {
    return (qd.a11 * c[0] + qd.a12 * c[1]) * x0 + (qd.a12 * c[0] + qd.a22 * c[1]) * x1;
  };
  SeriesBuilder sb;
  scan_box([&](long i, long j) {
    const long e2 = D * (qd.a11 * i * i + 2 * qd.a12 * i * j + qd.a22 * j * j) +
                    2 * ((qd.a11 * A0 + qd.a12 * A1) * i + (qd.a12 * A0 + qd.a22 * A1) * j);
    if (e2 >= lim) return false;
    const long x0 = D * i + A0, x1 = D * j + A1;
    const long s1 = lin(qd.c1, x0, x1), s2 = lin(qd.c2, x0, x1);
    if ((s1 == 0 || s2 == 0) && !opt.zero_sign_as_zero) throw ZeroSign("sign argument vanishes at a summation point");
    const long w = (s1 > 0) - (s1 < 0) - ((s2 > 0) - (s2 < 0));
    if (w == 0) return false;
    const Rat e = Rat(N) * Rat(e2, 2 * D);
    if (e >= order) return false;
    sb.add(e, frac_part(qd.B(z.b, Vec2{Rat(i), Rat(j)})), w);
    return true;
  });
  return sb.finish(order);
}

}  // namespace umbral
