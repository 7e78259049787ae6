#include <doctest.h>

#include <numeric>
#include <random>

#include "umbral/cyclotomic.hpp"

using namespace umbral;

TEST_CASE("roots of unity") {
  CHECK(turn(Rat(0)) == CycNum(1L));
  CHECK(turn(Rat(1, 2)) == CycNum(-1L));
  CHECK(turn(Rat(1, 4)).pow(2) == CycNum(-1L));
  CHECK(turn(Rat(1, 8)).pow(4) == CycNum(-1L));
  CHECK(turn(Rat(-3, 8)) * turn(Rat(3, 8)) == CycNum(1L));
  CHECK(turn(Rat(1, 3)).conductor() == 3);
  CHECK(turn(Rat(1, 6)).conductor() == 3);
  CHECK(turn(Rat(5, 48)).conductor() == 48);
  CHECK(turn(Rat(7, 4)) == turn(Rat(-1, 4)));
}

TEST_CASE("basic arithmetic") {
  const CycNum i = imag_unit();
  CHECK((CycNum(1L) + i) * (CycNum(1L) - i) == CycNum(2L));
  CHECK((i * i).to_integer() == Int(-1));
  CHECK(!i.to_integer().has_value());
  CHECK((turn(Rat(1, 3)) + turn(Rat(2, 3))).to_integer() == Int(-1));
  CHECK(CycNum(-2L).to_integer() == Int(-2));
  CHECK((i - i).is_zero());
  CHECK_THROWS_AS(CycNum(0L).inverse(), DivisionByZero);
  // sqrt(2) = zeta8 + zeta8^{-1} sits in Q(zeta8) but not lower
  const CycNum s2 = turn(Rat(1, 8)) + turn(Rat(-1, 8));
  CHECK((s2 * s2).to_integer() == Int(2));
  CHECK(s2.conductor() == 8);
  // sqrt(-3) = zeta3 - zeta3^2 comes back down to conductor 3
  const CycNum s3 = turn(Rat(1, 3)) - turn(Rat(2, 3));
  CHECK((s3 * s3).to_integer() == Int(-3));
  // i * zeta3 needs 12, i * i * zeta3 drops to 3
  CHECK((i * turn(Rat(1, 3))).conductor() == 12);
  CHECK((i * i * turn(Rat(1, 3))).conductor() == 3);
  CHECK(i.conj() == -i);
}

TEST_CASE("lift and reduce") {
  const CycNum x = turn(Rat(1, 8)) * Rat(3, 5) + CycNum(Rat(1, 7));
  for (int m : {8, 16, 24, 48}) {
    CHECK(CycNum::from_powers(m, {}).is_zero());
    std::vector<Rat> lifted = x.coeffs_in(m);
    CHECK(CycNum::from_basis(m, lifted) == x);
  }
}

TEST_CASE("product of turns is turn of sum") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const long q1 = 1 + rng() % 48, q2 = 1 + rng() % 48;
    if (std::lcm(q1, q2) > 240) continue;
    const Rat a(static_cast<long>(rng() % 97) - 48, q1), b(static_cast<long>(rng() % 97) - 48, q2);
    Rat s = a + b;
    REQUIRE(turn(a) * turn(b) == turn(s));
  }
}

TEST_CASE("field axioms on random values") {
  std::mt19937 rng(11);
  const int conductors[] = {1, 3, 4, 8, 12, 16, 24, 48};
  auto rnd = [&]() {
    const int n = conductors[rng() % 8];
    std::vector<Rat> c(n);
    for (auto& v : c) v = Rat(static_cast<long>(rng() % 7) - 3, 1 + rng() % 4);
    return CycNum::from_powers(n, c);
  };
  for (int trial = 0; trial < 60; ++trial) {
    const CycNum x = rnd(), y = rnd(), z = rnd();
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x + y == y + x);
    if (!x.is_zero()) CHECK(x * x.inverse() == CycNum(1L));
    const auto v = x.approx() * y.approx() - (x * y).approx();
    CHECK(std::abs(v) < 1e-9);
  }
}
