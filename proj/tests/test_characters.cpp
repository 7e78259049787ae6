#include <doctest.h>

#include "umbral/characters.hpp"
#include "umbral/modular.hpp"

using namespace umbral;

namespace {

void check_equal(const QSeries& a, const QSeries& b, const Rat& at_least) {
  const Verdict v = qs_equal(a, b);
  INFO("mismatch at q^" << v.exponent.get_str());
  CHECK(v.equal);
  CHECK(v.checked_to >= at_least);
}

}  // namespace

TEST_CASE("Heisenberg and Clifford characters") {
  check_equal(chi_heisenberg(1, 21) * chi_clifford(1, 1, 21), QSeries::constant(1L, 20), 20);
  check_equal(chi_clifford(-1, 3, 12), -chi_clifford(1, 3, 12), 12);
  check_equal(chi_heisenberg(2, 12), eta(2, 13).inverse(), 12);
}

TEST_CASE("half-lattice characters") {
  const Rat order = 25;
  std::vector<std::pair<Rat, CycNum>> alt, plain;
  for (long n = 0; n * n < 25; ++n) {
    alt.emplace_back(Rat(n * n), CycNum(n % 2 ? -1L : 1L));
    plain.emplace_back(Rat(n * n), CycNum(1L));
  }
  check_equal(chi_k_twisted(1, order) * eta(1, order + 1), QSeries::from_terms(alt, order), order);
  check_equal(chi_k(1, order) * eta(1, order + 1), QSeries::from_terms(plain, order), order);
  check_equal(chi_k(2, 10), chi_k(1, 5).rescale(2), 10);
}

TEST_CASE("lattice characters match theta_{m,r} at y = 1") {
  for (long m : {1, 4, 6}) {
    for (long r = 0; r < 2 * m; r += (m > 1 ? 3 : 1)) {
      const QSeries lhs = chi_lattice(m, r, 0, 1, 15) * eta(1, 16);
      check_equal(lhs, theta_index(m, r, 15).specialize(0, 0), 15);
    }
  }
  check_equal(chi_l1(1, 12), chi_lattice(1, 0, 0, 1, 12), 12);
  // the twist by h = 1/4 at norm 2 is the sign (-1)^n
  std::vector<std::pair<Rat, CycNum>> t;
  for (long n = -4; n <= 4; ++n) t.emplace_back(Rat(n * n), CycNum(n % 2 ? -1L : 1L));
  check_equal(chi_lattice(1, 0, ratio(1, 4), 1, 12) * eta(1, 13), QSeries::from_terms(t, 12), 12);
  CHECK_THROWS_AS(chi_lattice(2, 4, 0, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(chi_lattice(0, 0, 0, 1, 5), std::invalid_argument);
}

TEST_CASE("Weyl character against theta_1") {
  const Rat a = ratio(-1, 3), b = ratio(1, 5);
  const QSeries direct = chi_weyl_twisted_at(a, b, 1, 10);
  const QSeries viatheta = eta(1, 12).scaled(-imag_unit()) * theta1_ab(a, b, 1, 12).inverse();
  check_equal(direct, viatheta, 10);

  // the window has to hold every column that reaches below the horizon
  const JacobiSeries w = chi_weyl_twisted(1, -80, 40, 14);
  CHECK(w.strip() == Strip::Lower);
  check_equal(w.specialize(a, b), direct.truncate(7), 7);

  // chi(3z, 3 tau) at z = a tau + b is the character at 3z = a (3 tau) + 3b
  const JacobiSeries w3 = chi_weyl_twisted(3, -240, 120, 42);
  check_equal(w3.specialize(a, b), chi_weyl_twisted_at(a, 3 * b, 3, 21), 21);

  CHECK_THROWS_AS(chi_weyl_twisted_at(ratio(1, 3), 0, 1, 5), StripViolation);
  CHECK_THROWS_AS(w.specialize(ratio(1, 3), 0), StripConflict);
  CHECK_THROWS_AS((w * theta1_product(-80, 8, 12)).specialize(ratio(1, 2), 0), StripConflict);
  CHECK_THROWS_AS(w.substitute(2, 0, 1), StripConflict);
}

TEST_CASE("twisted Clifford character against theta_1") {
  const Rat a = ratio(1, 4), b = ratio(1, 3);
  check_equal(chi_clifford_twisted_at(a, b + ratio(1, 2), 1, 12),
              -(theta1_ab(a, b, 1, 13) * eta(1, 13).inverse()), 12);

  const JacobiSeries c = chi_clifford_twisted(1, ratio(1, 2), 1, -20, 20, 12);
  check_equal(c.specialize(a, b), chi_clifford_twisted_at(a, b + ratio(1, 2), 1, 7), 7);

  // chi(6z + 1/2, 3 tau) at z = a tau + b
  const JacobiSeries c6 = chi_clifford_twisted(6, ratio(1, 2), 3, -60, 60, 15);
  check_equal(c6.specialize(ratio(1, 8), b), chi_clifford_twisted_at(ratio(1, 4), 6 * b + ratio(1, 2), 3, 8), 8);

  // rank 4 is the square of rank 2
  check_equal(chi_clifford_twisted_at(a, b, 1, 10, 4), chi_clifford_twisted_at(a, b, 1, 11).pow(2), 10);
  check_equal(chi_weyl_twisted_at(-a, b, 1, 10, 4), chi_weyl_twisted_at(-a, b, 1, 11).pow(2).truncate(10), 10);
  CHECK_THROWS_AS(chi_clifford_twisted_at(a, b, 1, 5, 3), std::invalid_argument);
}
