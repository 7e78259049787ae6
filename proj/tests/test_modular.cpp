#include <doctest.h>

#include "umbral/modular.hpp"

using namespace umbral;

namespace {

// Direct lattice sum for theta(a tau' + b; tau'), tau' = c tau.
QSeries theta_direct(const Rat& a, const Rat& b, const Rat& c, const Rat& order) {
  SeriesBuilder sb;
  for (long k = -200; k <= 200; ++k) {
    const Rat nu = ratio(2 * k + 1, 2);
    const Rat e = c * (nu * nu / 2 + a * nu);
    if (e < order) sb.add(e, frac_part(nu * (b + ratio(1, 2))), 1);
  }
  return sb.finish(order);
}

QSeries q_power_sum(long sign, const Rat& order) {
  SeriesBuilder sb;
  for (long n = -30; n <= 30; ++n) {
    if (Rat(n * n) < order) sb.add(Rat(n * n), sign < 0 && (n % 2) ? ratio(1, 2) : Rat(0), 1);
  }
  return sb.finish(order);
}

}  // namespace

TEST_CASE("theta1 triple product matches the lattice sum") {
  const Rat v = 15;
  JacobiSeries prod = theta1_product(-11, 11, v);
  JacobiSeries sum = theta_symbolic(-11, 11, v).reflect();
  CHECK(prod == sum);
  CHECK(prod.column(1) == QSeries::monomial(ratio(1, 8), -imag_unit(), v));
}

TEST_CASE("theta2 triple product matches the lattice sum") {
  const Rat v = 12;
  JacobiBuilder b;
  for (int l2 = -41; l2 <= 41; l2 += 2) {
    const Rat nu = ratio(l2, 2);
    if (nu * nu / 2 < v) b.add(l2, nu * nu / 2, 0, 1);
  }
  CHECK(theta2_product(-9, 9, v) == b.finish(-9, 9, v));
}

TEST_CASE("pentagonal numbers in eta") {
  const Rat order = 25;
  SeriesBuilder sb;
  for (long k = -10; k <= 10; ++k) {
    const Rat e = ratio(k * (3 * k - 1), 2) + ratio(1, 24);
    if (e < order) sb.add(e, Rat(0), k % 2 ? -1 : 1);
  }
  QSeries want = sb.finish(order);
  QSeries got = eta(1, order);
  CHECK(got == want);
  CHECK(got.valid_to() == order);
}

TEST_CASE("eta quotients for the two classical Jacobi thetas") {
  const Rat order = 25;
  QSeries t3 = eta_quotient({{2, 5}, {1, -2}, {4, -2}}, order);
  CHECK(t3 == q_power_sum(1, order));
  QSeries t4 = eta_quotient({{1, 2}, {2, -1}}, order);
  CHECK(t4 == q_power_sum(-1, order));
  CHECK(eta_quotient({{1, 1}, {1, -1}}, order) == QSeries::constant(1L, order));
}

TEST_CASE("specialized theta against direct enumeration") {
  const Rat order = 12;
  const std::vector<std::tuple<Rat, Rat, Rat>> pts = {
      {ratio(1, 3), 0, 1}, {ratio(-1, 4), ratio(1, 5), 2}, {ratio(5, 2), ratio(1, 2), 3}, {0, ratio(1, 4), ratio(1, 2)}};
  for (const auto& [a, b, c] : pts) {
    QSeries got = theta_ab(a, b, c, order);
    CHECK(got.valid_to() == order);
    CHECK(got == theta_direct(a, b, c, order));
    CHECK(theta1_ab(a, b, c, order) == theta_direct(-a, -b, c, order));
  }
}

TEST_CASE("theta quasi-periodicity") {
  const Rat order = 10, a = ratio(1, 6), b = ratio(1, 7);
  QSeries t = theta_ab(a, b, 1, order);
  CHECK(theta_ab(a, b + 1, 1, order) == -t);
  QSeries moved = theta_ab(a + 1, b, 1, order);
  QSeries expect = t.shift(ratio(-1, 2) - a).scaled(-turn(-b));
  const Rat common = std::min(moved.valid_to(), expect.valid_to());
  CHECK(common >= order - 1);
  CHECK(moved.truncate(common) == expect.truncate(common));
}

TEST_CASE("specialization is multiplicative") {
  const Rat v = 10;
  JacobiSeries a = theta1_product(-41, 41, v);
  JacobiSeries b = theta_index(2, 1, v, std::make_pair(-41, 41));
  const Rat x = ratio(1, 5), y = ratio(1, 3);
  QSeries lhs = (a * b).specialize(x, y);
  QSeries rhs = a.specialize(x, y) * b.specialize(x, y);
  const Rat common = std::min(lhs.valid_to(), rhs.valid_to());
  CHECK(lhs.truncate(common) == rhs.truncate(common));
}

TEST_CASE("index theta") {
  const Rat v = 20;
  JacobiSeries t = theta_index(3, 1, v);
  CHECK(t.column(2) == QSeries::monomial(ratio(1, 12), 1L, v));
  CHECK(t.column(-10) == QSeries::monomial(ratio(25, 12), 1L, v));
  CHECK(t.column(14) == QSeries::monomial(ratio(49, 12), 1L, v));
  CHECK(t.column(4).is_zero());
  CHECK(theta_index(3, 7, v) == t);
}

TEST_CASE("pochhammer symbols") {
  const Rat order = 11;
  QSeries fin = pochhammer({1L, 1, 1, 3}, order);
  CHECK(fin == QSeries::from_terms({{0, 1L}, {1, -1L}, {2, -1L}, {4, 1L}, {5, 1L}, {6, -1L}}, order));
  QSeries inv = pochhammer_inverse({1L, 1, 1, std::nullopt}, order);
  const long partitions[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (long n = 0; n < 11; ++n) CHECK(inv.coeff(Rat(n)) == CycNum(partitions[n]));
  CHECK(pochhammer({1L, 1, 1, std::nullopt}, order) == eta(1, order + ratio(1, 24)).shift(ratio(-1, 24)));
  // (-q; q^2)_inf against (q^2; q^4) / (q; q^2)
  QSeries odd = pochhammer({-1L, 1, 2, std::nullopt}, order);
  QSeries alt = pochhammer({1L, 2, 4, std::nullopt}, order) * pochhammer_inverse({1L, 1, 2, std::nullopt}, order);
  CHECK(odd == alt);
}

TEST_CASE("jacobi binomial division") {
  const Rat v = 9;
  JacobiSeries t = theta_symbolic(-21, 21, v);
  for (int l2 : {2, -2, 4}) {
    const CycNum c = turn(ratio(1, 3));
    JacobiSeries back = t.div_binomial(c, l2, 1).mul_binomial(c, l2, 1);
    CHECK(back.restrict(-9, 9) == t.restrict(-9, 9));
  }
}
