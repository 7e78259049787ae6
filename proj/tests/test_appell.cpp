#include <doctest.h>

#include "umbral/appell.hpp"

using namespace umbral;

TEST_CASE("mu three ways") {
  const Rat order = 10;
  struct Case {
    Point z1, z2;
  };
  const std::vector<Case> cases = {
      {{ratio(1, 3), 0}, {ratio(1, 4), 0}},
      {{ratio(1, 5), ratio(1, 3)}, {ratio(1, 2), ratio(1, 4)}},
      {{ratio(1, 3), ratio(1, 5)}, {ratio(1, 4), ratio(1, 7)}},
  };
  for (const auto& c : cases) {
    for (long N : {1, 2}) {
      const QSeries direct = mu(c.z1, c.z2, Rat(N), order);
      CHECK(direct.valid_to() == order);
      Verdict v1 = qs_equal(direct, mu_via_theta(c.z1, c.z2, N, order));
      CHECK(v1.equal);
      Verdict v2 = qs_equal(direct, mu_via_cone(c.z1, c.z2, N, order));
      CHECK(v2.equal);
    }
  }
}

TEST_CASE("mu strip conditions") {
  CHECK_THROWS_AS(mu({0, 0}, {ratio(1, 4), 0}, 1, 5), StripViolation);
  CHECK_THROWS_AS(mu({ratio(1, 3), 0}, {ratio(4, 3), 0}, 1, 5), StripViolation);
  CHECK_THROWS_AS(mu_m0(4, {0, ratio(1, 3)}, 1, 5), StripViolation);
  CHECK_THROWS_AS(mu_m0(4, {1, 0}, 1, 5), StripViolation);
}

TEST_CASE("mu_{m,0} geometric expansion against the indefinite theta") {
  const Rat order = 12;
  for (const Point& z : {Point{ratio(1, 3), ratio(1, 4)}, Point{ratio(-2, 5), ratio(1, 7)}, Point{ratio(1, 5), 0}}) {
    Verdict v = qs_equal(mu_m0_direct(4, z, 1, order), mu_m0_theta(4, z, 1, order));
    CHECK(v.equal);
    CHECK(v.checked_to == order);
  }
  CHECK_NOTHROW(mu_m0(3, {ratio(1, 2), ratio(1, 3)}, ratio(1, 2), 8));
}

TEST_CASE("mu_{m,0} is odd") {
  const Rat order = 12;
  const QSeries plus = mu_m0(4, {ratio(1, 5), 0}, 1, order);
  const QSeries minus = mu_m0(4, {ratio(-1, 5), 0}, 1, order);
  CHECK(minus == -plus);
}

TEST_CASE("mu_{m,0} through cone traces") {
  const Rat order = 12;
  for (const Rat& a : {ratio(1, 3), ratio(-1, 3)}) {
    for (const Rat& b : {Rat(0), ratio(1, 4)}) {
      for (long N : {1, 2}) {
        const Point z{a, b};
        Verdict v = qs_equal(mu_m0(4, z, Rat(N), order), mu_m0_via_cone(4, z, N, order));
        CHECK(v.equal);
        CHECK(v.checked_to == order);
      }
    }
  }
}

TEST_CASE("half-shifted combinations") {
  const Rat order = 10;
  const Point z{ratio(1, 3), ratio(1, 6)};
  const QSeries full = mu_m0(4, z, 1, order);
  const QSeries k0 = mu_m0_halfshift(4, 0, z, 1, order);
  const QSeries k1 = mu_m0_halfshift(4, 1, z, 1, order);
  CHECK(k0 + k1 == full);
  CHECK(k0 - k1 == full.tphase(ratio(1, 2)));
}

TEST_CASE("mu_{m,0} with symbolic y") {
  for (Strip s : {Strip::Lower, Strip::Upper}) {
    const Rat a = s == Strip::Lower ? ratio(-1, 3) : ratio(1, 3);
    const int lo2 = s == Strip::Lower ? -96 : -48, hi2 = s == Strip::Lower ? 48 : 96;
    const JacobiSeries j = mu_m0_jacobi(4, s, lo2, hi2, 16);
    CHECK(j.strip() == s);
    const Verdict v = qs_equal(j.specialize(a, ratio(1, 5)), mu_m0_direct(4, {a, ratio(1, 5)}, 1, 8));
    CHECK(v.equal);
    CHECK(v.checked_to == 8);
  }
  // mu_{m,0}(-z) = -mu_{m,0}(z) swaps the strips
  const JacobiSeries lower = mu_m0_jacobi(2, Strip::Lower, -40, 40, 6);
  const JacobiSeries upper = mu_m0_jacobi(2, Strip::Upper, -40, 40, 6);
  CHECK((lower.reflect() + upper).columns().empty());
}
