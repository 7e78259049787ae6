#include "umbral/characters.hpp"

#include <cmath>

#include "umbral/modular.hpp"

namespace umbral {

namespace {

void check_rank(int d) {
  if (d <= 0 || d % 2) throw std::invalid_argument("character rank d must be even and positive");
}

// Doubled y reach of theta_1 below q^v.
int theta_reach2(const Rat& v) { return 2 * static_cast<int>(std::ceil(std::sqrt(2.0 * std::max(0.0, v.get_d())))) + 4; }

int ceil_int(const Rat& v) { return static_cast<int>(ceil_rat(v).get_si()); }

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

// Columns of x and y agree on [lo2, hi2] below q^v.
bool same_columns(const JacobiSeries& x, const JacobiSeries& y, int lo2, int hi2, const Rat& v) {
  for (int l2 = lo2; l2 <= hi2; ++l2) {
    if (!qs_equal(x.column(l2).truncate(v), y.column(l2).truncate(v)).equal) return false;
  }
  return true;
}

// chi^{A_tw}(z, tau) of rank d on [lo2, hi2].
JacobiSeries clifford_base(int lo2, int hi2, const Rat& v, int d) {
  JacobiSeries j = JacobiSeries::monomial(d / 2, ratio(d, 24), 1L, lo2, hi2, v + ratio(d, 24));
  for (long n = 1; Rat(n - 1) < v; ++n) {
    for (int k = 0; k < d / 2; ++k) j = j.mul_binomial(-1L, -2, Rat(n - 1)).mul_binomial(-1L, 2, Rat(n));
  }
  return j.truncate(v);
}

// chi of the Weyl module in the lower strip on [lo2, hi2].
JacobiSeries weyl_base(int lo2, int hi2, const Rat& v, int d) {
  JacobiSeries j = JacobiSeries::monomial(-d / 2, -ratio(d, 24), 1L, lo2, hi2, v);
  j.tag(Strip::Lower);
  for (long n = 1; Rat(n - 1) < v; ++n) {
    for (int k = 0; k < d / 2; ++k) {
      j = j.div_binomial(1L, -2, Rat(n - 1));
      if (Rat(n) < v) j = j.div_binomial(1L, 2, Rat(n));
    }
  }
  return j;
}

}  // namespace

QSeries chi_heisenberg(const Rat& c, const Rat& order) { return eta_quotient({{c, -1}}, order); }

QSeries chi_clifford(int sign, const Rat& c, const Rat& order) {
  QSeries e = eta(c, order);
  return sign > 0 ? e : -e;
}

JacobiSeries chi_clifford_twisted(int cz, const Rat& t, const Rat& ct, int lo2, int hi2, const Rat& order, int d) {
  check_rank(d);
  if (cz <= 0 || ct <= 0) throw std::invalid_argument("character scales must be positive");
  const Rat v = order / ct;
  // every factor is a polynomial in y, so a margin of the theta reach on
  // each side keeps the requested window exact
  const int pad = theta_reach2(v) * (d / 2) + 4;
  const int blo = std::min(lo2 / cz - 1, 0) - pad, bhi = std::max(hi2 / cz + 1, 0) + pad;
  JacobiSeries base = clifford_base(blo, bhi, v, d);
  if (d == 2) {
    // chi^{A_tw}(z + 1/2) eta = -theta_1(z)
    JacobiSeries lhs = base.substitute(1, ratio(1, 2), 1).times(eta(1, v + 1));
    JacobiSeries rhs = -theta1_product(blo, bhi, v + 1);
    const int inner = pad - 4;
    require(same_columns(lhs, rhs, blo + inner, bhi - inner, v), "twisted Clifford character disagrees with theta_1");
  }
  return base.substitute(cz, t, ct).restrict(lo2, hi2);
}

JacobiSeries chi_weyl_twisted(int c, int lo2, int hi2, const Rat& order, int d) {
  check_rank(d);
  if (c <= 0) throw std::invalid_argument("character scales must be positive");
  const Rat v = order / c;
  // a column L below q^v only draws on columns in [L - v, v]
  const int reach = theta_reach2(v + 1);
  const int blo = std::min(lo2 / c - 1, 0) - 2 * ceil_int(v) - 2 * reach - 4;
  const int bhi = std::max(hi2 / c + 1, 2 * ceil_int(v)) + 2 * reach + 4;
  JacobiSeries base = weyl_base(blo, bhi, v, d);
  if (d == 2) {
    // chi^{Weyl}(z) theta_1(z) = -i eta
    JacobiSeries lhs = base * theta1_product(blo, bhi, v + 1);
    JacobiSeries rhs = JacobiSeries::from_qseries(eta(1, v + 1).scaled(-imag_unit()), blo, bhi);
    require(same_columns(lhs, rhs, std::min(lo2 / c - 1, 0) - reach, std::max(hi2 / c + 1, 0) + reach, v),
            "twisted Weyl character disagrees with -i eta / theta_1");
  }
  return base.substitute(c, 0, c).restrict(lo2, hi2);
}

QSeries chi_clifford_twisted_at(const Rat& a, const Rat& b, const Rat& ct, const Rat& order, int d) {
  check_rank(d);
  if (ct <= 0) throw std::invalid_argument("character scales must be positive");
  const Rat v = order / ct;
  QSeries s = ensure_order(
      [&](const Rat& w) {
        // horizon loss from the first few factors with negative exponents
        const Rat lead = ratio(d, 24) + a * ratio(d, 4);
        QSeries p = QSeries::constant(1L, w - lead + abs(a) * d);
        for (long n = 1; Rat(n - 1) - abs(a) < p.valid_to(); ++n) {
          for (int k = 0; k < d / 2; ++k) {
            p = p.mul_one_minus(-turn(-b), Rat(n - 1) - a).mul_one_minus(-turn(b), Rat(n) + a);
          }
        }
        return p.shift(lead).scaled(turn(b * ratio(d, 4)));
      },
      v);
  return s.rescale(ct);
}

QSeries chi_weyl_twisted_at(const Rat& a, const Rat& b, const Rat& ct, const Rat& order, int d) {
  check_rank(d);
  if (ct <= 0) throw std::invalid_argument("character scales must be positive");
  if (!(a > -1 && a < 0)) throw StripViolation("the Weyl character needs 0 < -Im z < Im tau");
  const Rat v = order / ct;
  const Rat lead = -ratio(d, 24) - a * ratio(d, 4);
  QSeries p = QSeries::constant(1L, v - lead);
  for (int k = 0; k < d / 2; ++k) {
    p = p * pochhammer_inverse({turn(-b), -a, 1, {}}, v - lead) * pochhammer_inverse({turn(b), 1 + a, 1, {}}, v - lead);
  }
  return p.shift(lead).scaled(turn(-b * ratio(d, 4))).rescale(ct);
}

QSeries chi_lattice(long m, long r, const Rat& h, const Rat& c, const Rat& order) {
  if (m <= 0 || r < 0 || r >= 2 * m) throw std::invalid_argument("lattice character needs m > 0 and 0 <= r < 2m");
  if (c <= 0) throw std::invalid_argument("character scales must be positive");
  const Rat v = order / c + ratio(1, 24);
  SeriesBuilder sb;
  const long reach = static_cast<long>(std::ceil(std::sqrt(std::max(0.0, v.get_d()) / m))) + 2;
  for (long n = -reach; n <= reach; ++n) {
    const long l = 2 * m * n + r;
    const Rat e = ratio(l * l, 4 * m);
    if (e < v) sb.add(e, frac_part(h * l), 1);
  }
  return (sb.finish(v) * chi_heisenberg(1, v)).truncate(order / c).rescale(c);
}

namespace {

QSeries half_lattice(const Rat& c, const Rat& order, bool alternate) {
  const Rat v = order / c + ratio(1, 24);
  SeriesBuilder sb;
  for (long n = 0; Rat(n * n) < v; ++n) sb.add(Rat(n * n), 0, alternate && (n % 2) ? -1 : 1);
  return (sb.finish(v) * chi_heisenberg(1, v)).truncate(order / c).rescale(c);
}

}  // namespace

QSeries chi_l1(const Rat& c, const Rat& order) { return chi_lattice(1, 0, 0, c, order); }
QSeries chi_k(const Rat& c, const Rat& order) { return half_lattice(c, order, false); }
QSeries chi_k_twisted(const Rat& c, const Rat& order) { return half_lattice(c, order, true); }

}  // namespace umbral
