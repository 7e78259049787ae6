#include <doctest.h>

#include "umbral/indefinite.hpp"
#include "umbral/mock.hpp"
#include "umbral/modular.hpp"

using namespace umbral;

namespace {

// Square box |m_i| <= M around the shift, no structure assumed.
QSeries box_theta(const QuadData& qd, const ShiftPair& sp, long N, const Rat& order, long M, bool zero_ok = false) {
  SeriesBuilder sb;
  for (long i = -M; i <= M; ++i) {
    for (long j = -M; j <= M; ++j) {
      const Vec2 n{sp.a[0] + i, sp.a[1] + j};
      const long w = cone_sign(qd, n, {zero_ok});
      const Rat e = Rat(N) * qd.Q(n);
      if (w != 0 && e < order) sb.add(e, frac_part(qd.B(n, sp.b)), w);
    }
  }
  return sb.finish(order);
}

const QuadData kSynthetic{2, 3, 2, {-2, 3}, {-3, 2}};

}  // namespace

TEST_CASE("cone data validation") {
  CHECK_NOTHROW(QuadData::standard().validate());
  CHECK(QuadData::standard().cone_constants() == std::make_pair(1L, 1L));
  CHECK(QuadData::appell_lerch(4).cone_constants() == std::make_pair(1L, 1L));
  CHECK(kSynthetic.cone_constants() == std::make_pair(5L, 5L));
  CHECK_THROWS_AS((QuadData{1, 0, 1, {0, 1}, {1, 0}}.validate()), InvalidConeData);
  CHECK_THROWS_AS((QuadData{1, 1, 0, {1, 0}, {-1, 1}}.validate()), InvalidConeData);
  CHECK_THROWS_AS((QuadData{1, 1, 0, {0, 1}, {1, -1}}.validate()), InvalidConeData);
}

TEST_CASE("sign factor support for the standard family") {
  const QuadData qd = QuadData::standard();
  const Vec2 a{ratio(1, 4), ratio(3, 5)};
  for (long i = -6; i <= 6; ++i) {
    for (long j = -6; j <= 6; ++j) {
      const long w = cone_sign(qd, Vec2{a[0] + i, a[1] + j});
      if (i >= 0 && j >= 0) {
        CHECK(w == 2);
      } else if (i < 0 && j < 0) {
        CHECK(w == -2);
      } else {
        CHECK(w == 0);
      }
    }
  }
  CHECK_THROWS_AS(cone_sign(qd, Vec2{Rat(0), ratio(1, 2)}), ZeroSign);
  CHECK(cone_sign(qd, Vec2{Rat(0), ratio(1, 2)}, {true}) == 1);
}

TEST_CASE("quadrant enumeration against a plain box") {
  const Rat order = 12;
  struct Case {
    QuadData qd;
    ShiftPair sp;
    long N;
  };
  const std::vector<Case> cases = {
      {QuadData::standard(), {{ratio(1, 4), ratio(1, 4)}, {0, 0}}, 1},
      {QuadData::standard(), {{ratio(5, 8), ratio(1, 8)}, {ratio(1, 2), 0}}, 2},
      {QuadData::appell_lerch(3), {{ratio(1, 3), ratio(2, 7)}, {ratio(1, 5), ratio(1, 4)}}, 1},
      {kSynthetic, {{ratio(1, 3), ratio(1, 2)}, {ratio(1, 7), 0}}, 1},
  };
  for (const auto& c : cases) {
    QSeries fast = itheta_ab(c.qd, c.sp, c.N, order);
    CHECK(fast.valid_to() == order);
    CHECK(fast == box_theta(c.qd, c.sp, c.N, order, 80));
  }
}

TEST_CASE("integer shifts of a leave theta unchanged") {
  const Rat order = 10;
  const std::vector<std::pair<QuadData, ShiftPair>> data = {
      {QuadData::standard(), {{ratio(1, 4), ratio(1, 4)}, {0, 0}}},
      {QuadData::standard(), {{ratio(2, 3), ratio(1, 6)}, {ratio(1, 2), 0}}},
      {QuadData::appell_lerch(4), {{ratio(1, 3), ratio(1, 5)}, {ratio(1, 4), 0}}},
      {kSynthetic, {{ratio(1, 5), ratio(3, 4)}, {ratio(1, 3), ratio(1, 6)}}},
  };
  const std::vector<std::array<long, 2>> shifts = {{1, 0}, {-2, 3}, {4, -1}};
  for (const auto& [qd, sp] : data) {
    QSeries base = itheta_ab(qd, sp, 1, order);
    for (const auto& s : shifts) {
      ShiftPair moved = sp;
      moved.a[0] += s[0];
      moved.a[1] += s[1];
      CHECK(itheta_ab(qd, moved, 1, order) == base);
    }
  }
}

TEST_CASE("z-form and shifted form are related by a monomial") {
  const Rat order = 10;
  const QuadData qd = QuadData::standard();
  for (long N : {1, 3}) {
    const ShiftPair sp{{ratio(2, 3), ratio(1, 6)}, {ratio(1, 2), ratio(1, 5)}};
    QSeries z = itheta_z(qd, sp, N, order);
    QSeries ab = itheta_ab(qd, sp, N, order + Rat(N) * qd.Q(sp.a))
                     .shift(-Rat(N) * qd.Q(sp.a))
                     .scaled(turn(-qd.B(sp.a, sp.b)));
    CHECK(qs_equal(z, ab).equal);
    CHECK(z.valid_to() == order);
  }
}

TEST_CASE("antipodal flip negates the z-form") {
  const Rat order = 10;
  const QuadData qd = QuadData::appell_lerch(4);
  const ShiftPair z{{ratio(1, 5), ratio(1, 3)}, {ratio(1, 7), ratio(1, 2)}};
  const ShiftPair flipped{{-z.a[0], -z.a[1]}, {-z.b[0], -z.b[1]}};
  CHECK(itheta_z(qd, flipped, 1, order) == -itheta_z(qd, z, 1, order));
}

TEST_CASE("U0 from its indefinite theta") {
  const Rat order = 15;
  const QSeries th = itheta_ab(QuadData::standard(), {{ratio(1, 4), ratio(1, 4)}, {0, 0}}, 4, order + 1);
  const QSeries pre = eta_quotient({{4, 1}, {8, -2}}, order + 1).shift(ratio(1, 8)).scaled(ratio(1, 2));
  Verdict v = qs_equal(pre * th, mock(MockName::U0, order));
  CHECK(v.equal);
  CHECK(v.checked_to == order);
}

TEST_CASE("degenerate inputs are rejected") {
  // a1 = 0 puts the n1 = 0 line, where Q vanishes identically, in the support
  CHECK_THROWS_AS(itheta_ab(QuadData::standard(), {{0, ratio(1, 3)}, {0, 0}}, 1, 5), ZeroSign);
  CHECK_THROWS_AS(itheta_ab(QuadData::standard(), {{0, ratio(1, 3)}, {0, 0}}, 1, 5, {true}), UnboundedSupport);
  CHECK_THROWS_AS(itheta_ab(QuadData::appell_lerch(2), {{ratio(1, 3), 0}, {0, 0}}, 1, 5), ZeroSign);
  CHECK_NOTHROW(itheta_ab(QuadData::appell_lerch(2), {{ratio(1, 3), 0}, {0, 0}}, 1, 5, {true}));
}
