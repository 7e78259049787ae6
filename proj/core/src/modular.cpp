#include "umbral/modular.hpp"

#include <cmath>

namespace umbral {

namespace {

// Smallest integer L with L >= |a| + sqrt(a^2 + 2 v), with a little slack.
long theta_reach(const Rat& a, const Rat& v) {
  const double ad = std::fabs(a.get_d());
  const double vd = std::max(0.0, v.get_d());
  return static_cast<long>(std::ceil(ad + std::sqrt(ad * ad + 2.0 * vd))) + 2;
}

void check_spec(const PochSpec& s) {
  if (s.scale <= 0) throw std::invalid_argument("pochhammer base exponent must be positive");
  if (!s.length && s.shift + s.scale <= 0) {
    throw std::invalid_argument("infinite pochhammer product needs increasing positive exponents");
  }
}

}  // namespace

QSeries pochhammer(const PochSpec& s, const Rat& order) {
  check_spec(s);
  QSeries p = QSeries::constant(1L, order);
  for (long k = 0;; ++k) {
    if (s.length && k >= *s.length) break;
    const Rat e = s.shift + s.scale * Rat(k);
    if (!s.length && e >= p.valid_to()) break;
    if (s.length && e >= p.valid_to() && e > 0) break;
    p = p.mul_one_minus(s.root, e);
  }
  return p;
}

QSeries pochhammer_inverse(const PochSpec& s, const Rat& order) {
  check_spec(s);
  QSeries p = QSeries::constant(1L, order);
  for (long k = 0;; ++k) {
    if (s.length && k >= *s.length) break;
    const Rat e = s.shift + s.scale * Rat(k);
    if (e >= p.valid_to() && e > 0) break;
    p = p.div_one_minus(s.root, e);
  }
  return p;
}

QSeries eta(const Rat& c, const Rat& order) { return eta_quotient({{c, 1}}, order); }

QSeries eta_quotient(const std::vector<std::pair<Rat, long>>& factors, const Rat& order) {
  Rat lead = 0;
  for (const auto& [c, p] : factors) {
    if (c <= 0) throw std::invalid_argument("eta argument scale must be positive");
    lead += c * Rat(p) / 24;
  }
  const Rat inner = order - lead;
  QSeries s = QSeries::constant(1L, inner);
  for (const auto& [c, p] : factors) {
    for (long n = 1; c * Rat(n) < inner; ++n) {
      const Rat e = c * Rat(n);
      for (long t = 0; t < std::labs(p); ++t) s = p > 0 ? s.mul_one_minus(1L, e) : s.div_one_minus(1L, e);
    }
  }
  return s.shift(lead);
}

JacobiSeries theta_symbolic(int lo2, int hi2, const Rat& v) {
  JacobiBuilder b;
  for (int l2 = lo2; l2 <= hi2; ++l2) {
    if (l2 % 2 == 0) continue;
    const Rat nu = ratio(l2, 2);
    const Rat e = nu * nu / 2;
    if (e >= v) continue;
    b.add(l2, e, nu / 2, 1);
  }
  return b.finish(lo2, hi2, v);
}

QSeries theta_ab(const Rat& a, const Rat& b, const Rat& c, const Rat& order) {
  const Rat inner = order / c;
  const long L = theta_reach(a, inner);
  const int w = static_cast<int>(2 * L + 1);
  const Rat v = inner + abs(a) * ratio(w, 2);
  return theta_symbolic(-w, w, v).specialize(a, b).truncate(inner).rescale(c);
}

QSeries theta1_ab(const Rat& a, const Rat& b, const Rat& c, const Rat& order) { return theta_ab(-a, -b, c, order); }

namespace {

// Products of the triple-product shape only produce y^l at q powers of at
// least |l|(|l|-1)/2, so running on a window that reaches past sqrt(2v)
// makes every column of the requested window exact.
JacobiSeries triple_product(const CycNum& lead, const CycNum& sign, int lo2, int hi2, const Rat& v) {
  const int reach = 2 * static_cast<int>(std::ceil(std::sqrt(2.0 * std::max(0.0, v.get_d())))) + 5;
  const int ilo = std::min(lo2, -reach), ihi = std::max(hi2, reach);
  JacobiSeries j = JacobiSeries::monomial(1, ratio(1, 8), lead, ilo, ihi, v);
  for (long n = 1; Rat(n - 1) < v; ++n) {
    j = j.mul_binomial(sign, -2, Rat(n - 1)).mul_binomial(sign, 2, Rat(n)).mul_binomial(1L, 0, Rat(n));
  }
  return j.restrict(lo2, hi2);
}

}  // namespace

JacobiSeries theta1_product(int lo2, int hi2, const Rat& v) { return triple_product(-imag_unit(), 1L, lo2, hi2, v); }

JacobiSeries theta2_product(int lo2, int hi2, const Rat& v) { return triple_product(1L, -1L, lo2, hi2, v); }

JacobiSeries theta_index(long m, long r, const Rat& order, std::optional<std::pair<int, int>> window) {
  if (m <= 0) throw std::invalid_argument("theta index must be positive");
  const long reach = static_cast<long>(std::ceil(std::sqrt(4.0 * m * std::max(0.0, order.get_d())))) + 1;
  const int lo2 = window ? window->first : static_cast<int>(-2 * reach);
  const int hi2 = window ? window->second : static_cast<int>(2 * reach);
  JacobiBuilder b;
  const long kmax = reach / (2 * m) + 2;
  for (long k = -kmax - std::labs(r); k <= kmax + std::labs(r); ++k) {
    const long l = 2 * m * k + r;
    const Rat e = ratio(l * l, 4 * m);
    if (e >= order) continue;
    b.add(static_cast<int>(2 * l), e, Rat(0), 1);
  }
  return b.finish(lo2, hi2, order);
}

}  // namespace umbral
