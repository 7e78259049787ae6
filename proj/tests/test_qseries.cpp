#include <doctest.h>

#include <map>
#include <random>

#include "umbral/qseries.hpp"

using namespace umbral;

namespace {

// Naive map-based reference arithmetic used as an independent oracle.
struct Ref {
  std::map<Rat, CycNum> t;
  Rat v;
};

Ref to_ref(const QSeries& s) {
  Ref r;
  r.v = s.valid_to();
  for (auto& [e, c] : s.terms()) r.t[e] = c;
  return r;
}

Rat ref_min(const Ref& r) { return r.t.empty() ? r.v : r.t.begin()->first; }

Ref ref_mul(const Ref& a, const Ref& b) {
  Ref r;
  r.v = std::min(a.v + ref_min(b), b.v + ref_min(a));
  for (auto& [e1, c1] : a.t) {
    for (auto& [e2, c2] : b.t) {
      if (e1 + e2 < r.v) r.t[e1 + e2] += c1 * c2;
    }
  }
  for (auto it = r.t.begin(); it != r.t.end();) it = it->second.is_zero() ? r.t.erase(it) : std::next(it);
  return r;
}

bool same(const QSeries& s, const Ref& r) {
  Ref x = to_ref(s);
  return x.v == r.v && x.t == r.t;
}

QSeries random_series(std::mt19937& rng, int terms) {
  const int dens[] = {1, 2, 3, 8, 16};
  const long turns[] = {1, 2, 3, 4, 8, 12, 24};
  std::vector<std::pair<Rat, CycNum>> t;
  const long d = dens[rng() % 5];
  Rat start(static_cast<long>(rng() % 5) - 2, d);
  start.canonicalize();
  for (int i = 0; i < terms; ++i) {
    Rat step(static_cast<long>(rng() % 12), d);
    step.canonicalize();
    Rat e = start + step;
    CycNum c = turn(Rat(static_cast<long>(rng() % 24), turns[rng() % 7])) * CycNum(Rat(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3));
    t.emplace_back(e, c);
  }
  return QSeries::from_terms(t, start + Rat(6 + static_cast<long>(rng() % 6)));
}

QSeries pentagonal_product(long order) {
  QSeries p = QSeries::constant(1L, Rat(order));
  for (long n = 1; n < order; ++n) p = p.mul_one_minus(1L, Rat(n));
  return p;
}

}  // namespace

TEST_CASE("addition and scaling") {
  const Rat V(10);
  QSeries a = QSeries::from_terms({{0, 1L}, {1, 1L}}, V);
  QSeries b = QSeries::from_terms({{0, -1L}, {1, 1L}}, V);
  CHECK(a + b == QSeries::monomial(1, 2L, V));
  CHECK(a.scaled(0L).is_zero());
  CHECK(a.scaled(0L).valid_to() == V);
  QSeries h = QSeries::monomial(Rat(1, 2), 1L, V);
  CHECK((h - h).is_zero());
  CHECK((a + QSeries::zero(Rat(3))).valid_to() == 3);
}

TEST_CASE("multiplication horizons") {
  std::vector<std::pair<Rat, CycNum>> geo;
  for (int n = 0; n < 10; ++n) geo.emplace_back(n, 1L);
  QSeries g = QSeries::from_terms(geo, 10);
  QSeries one_minus = QSeries::from_terms({{0, 1L}, {1, -1L}}, 1000);
  QSeries p = one_minus * g;
  CHECK(p == QSeries::constant(1L, 10));
  QSeries lo = QSeries::monomial(Rat(-1, 2), 1L, 5);
  QSeries hi = QSeries::monomial(Rat(1, 2), 1L, 5);
  QSeries prod = lo * hi;
  CHECK(prod.coeff(0) == CycNum(1L));
  CHECK(prod.valid_to() == Rat(9, 2));
}

TEST_CASE("pentagonal number theorem") {
  const long order = 40;
  QSeries p = pentagonal_product(order);
  SeriesBuilder b;
  for (long k = -10; k <= 10; ++k) b.add(Rat(k * (3 * k - 1), 2), Rat(0), (k % 2) ? -1 : 1);
  CHECK(p == b.finish(order));
  const long first[] = {1, -1, -1, 0, 0, 1, 0, 1};
  for (int e = 0; e < 8; ++e) CHECK(p.coeff(e) == CycNum(first[e]));
}

TEST_CASE("inverse") {
  QSeries one_minus = QSeries::from_terms({{0, 1L}, {1, -1L}}, 12);
  QSeries inv = one_minus.inverse();
  for (int e = 0; e < 12; ++e) CHECK(inv.coeff(e) == CycNum(1L));
  QSeries eta = pentagonal_product(20).shift(Rat(1, 24));
  QSeries ie = eta.inverse();
  CHECK(ie.min_exp() == Rat(-1, 24));
  QSeries prod = eta * ie;
  CHECK(prod.is_zero() == false);
  CHECK(qs_equal(prod, QSeries::constant(1L, 100)).equal);
  CHECK(prod.valid_to() >= Rat(19));
  CHECK_THROWS_AS(QSeries::zero(3).inverse(), NotAUnit);
}

TEST_CASE("rescale, shift, coeff") {
  QSeries a = QSeries::from_terms({{0, 1L}, {1, 1L}}, 10);
  CHECK(a.rescale(2) == QSeries::from_terms({{0, 1L}, {2, 1L}}, 20));
  CHECK(QSeries::monomial(Rat(1, 24), 1L, 5).rescale(Rat(1, 2)).min_exp() == Rat(1, 48));
  std::mt19937 rng(3);
  for (int i = 0; i < 10; ++i) {
    QSeries x = random_series(rng, 8);
    CHECK(x.rescale(3).rescale(Rat(1, 3)) == x);
  }
  CHECK(a.coeff(Rat(1, 2)).is_zero());
  CHECK_THROWS_AS(a.coeff(10), HorizonError);
  CHECK(QSeries::constant(7L, 5).coeff(0) == CycNum(7L));
}

TEST_CASE("equality verdicts") {
  QSeries a = QSeries::from_terms({{0, 1L}, {1, 1L}}, 10);
  QSeries b = QSeries::from_terms({{0, 1L}, {1, 2L}}, 10);
  Verdict v = qs_equal(a, b);
  CHECK_FALSE(v.equal);
  CHECK(v.exponent == 1);
  CHECK(v.lhs == CycNum(1L));
  CHECK(v.rhs == CycNum(2L));
  Verdict w = qs_equal(a, a.truncate(7));
  CHECK(w.equal);
  CHECK(w.checked_to == 7);
}

TEST_CASE("ring operations agree with the naive reference") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    QSeries x = random_series(rng, 10), y = random_series(rng, 10), z = random_series(rng, 6);
    REQUIRE(same(x * y, ref_mul(to_ref(x), to_ref(y))));
    CHECK(qs_equal((x * y) * z, x * (y * z)).equal);
    CHECK(qs_equal((x + y) * z, x * z + y * z).equal);
    CHECK(x * y == y * x);
    if (!x.is_zero()) {
      QSeries xi = x.inverse();
      const Rat v = xi.valid_to() + x.min_exp();
      CHECK(qs_equal(x * xi, QSeries::constant(1L, v)).equal);
    }
  }
}

TEST_CASE("binomial factor kernels") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    QSeries x = random_series(rng, 8);
    const CycNum c = turn(Rat(static_cast<long>(rng() % 8), 8)) * Rat(1 + static_cast<long>(rng() % 3));
    Rat e(1 + static_cast<long>(rng() % 5), 1 + rng() % 4);
    e.canonicalize();
    QSeries f = QSeries::from_terms({{0, 1L}, {e, -c}}, x.valid_to() + 50);
    CHECK(x.mul_one_minus(c, e) == x * f);
    CHECK(qs_equal(x.div_one_minus(c, e) * f, x).equal);
    CHECK(x.div_one_minus(c, e).valid_to() == x.valid_to());
  }
  // e < 0 expands in the inverse direction
  QSeries one = QSeries::constant(1L, 5);
  QSeries g = one.div_one_minus(2L, -1);
  CHECK(g.coeff(1) == CycNum(Rat(-1, 2)));
  CHECK(g.coeff(2) == CycNum(Rat(-1, 4)));
}

TEST_CASE("large coefficients take the wide kernels") {
  QSeries p = pentagonal_product(60).inverse();
  QSeries big = p.pow(24);
  QSeries back = big * pentagonal_product(60).pow(24);
  CHECK(qs_equal(back, QSeries::constant(1L, 1000)).equal);
  QSeries huge = big.scaled(Int("1000000000000000000000"));
  CHECK(qs_equal(huge * pentagonal_product(60).pow(24), QSeries::constant(Int("1000000000000000000000"), 1000)).equal);
}

TEST_CASE("tau shift phases") {
  QSeries a = QSeries::from_terms({{Rat(1, 2), 1L}, {1, 1L}}, 5);
  QSeries b = a.tphase(1);
  CHECK(b.coeff(Rat(1, 2)) == CycNum(-1L));
  CHECK(b.coeff(1) == CycNum(1L));
  CHECK(a.tphase(Rat(1, 2)).tphase(Rat(1, 2)) == b);
}

TEST_CASE("builder folds conductor 2 mod 4") {
  SeriesBuilder b;
  b.add(0, Rat(1, 6), 1);
  b.add(0, Rat(5, 6), 1);
  QSeries s = b.finish(3);
  CHECK(s.coeff(0) == CycNum(1L));
  SeriesBuilder c;
  c.add(1, Rat(1, 10), 2);
  CHECK(c.finish(3).coeff(1) == turn(Rat(1, 10)) * CycNum(2L));
}
