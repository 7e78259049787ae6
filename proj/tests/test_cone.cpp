#include <doctest.h>

#include "umbral/cone.hpp"
#include "umbral/modular.hpp"

using namespace umbral;

namespace {

const QuadData kSynthetic{2, 3, 2, {-2, 3}, {-3, 2}};

ConeSpec spec(const QuadData& qd, long N, Vec2 a, Vec2 b) { return ConeSpec{qd, N, a, b}; }

}  // namespace

TEST_CASE("lowest cone points by hand") {
  const ConeSpec s = spec(QuadData::standard(), 1, {ratio(1, 4), ratio(1, 4)}, {ratio(1, 3), ratio(1, 5)});
  // x = (1/4, 1/4 + n2) for n2 = 0, 1, 2 has Q = 3/32, 11/32, 19/32; all
  // other cone points start at 27/32
  const Rat order = ratio(5, 8);
  QSeries want = QSeries::from_terms(
      {{ratio(3, 32), 1L}, {ratio(11, 32), turn(ratio(1, 3))}, {ratio(19, 32), turn(ratio(2, 3))}}, order);
  CHECK(cone_lattice_sum(s, order) == want);
  QSeries tr = cone_trace(s, 3);
  CHECK(tr.min_exp() == ratio(3, 32) - ratio(1, 12));
  CHECK(tr.coeff(tr.min_exp()) == CycNum(1L));
}

TEST_CASE("trace equals the indefinite theta form") {
  const Rat order = 15;
  const std::vector<ConeSpec> specs = {
      spec(QuadData::standard(), 8, {ratio(5, 8), ratio(1, 8)}, {ratio(1, 2), 0}),
      spec(QuadData::standard(), 1, {ratio(1, 4), ratio(1, 4)}, {0, 0}),
      spec(QuadData::standard(), 2, {ratio(1, 3), 0}, {ratio(1, 5), ratio(1, 7)}),
      spec(QuadData::appell_lerch(4), 1, {ratio(1, 3), 0}, {ratio(1, 4), 0}),
      spec(kSynthetic, 1, {ratio(1, 3), ratio(1, 5)}, {ratio(1, 7), ratio(2, 3)}),
      spec(kSynthetic, 1, {0, ratio(1, 2)}, {ratio(1, 4), ratio(1, 3)}),
      spec(kSynthetic, 2, {0, 0}, {ratio(1, 5), ratio(1, 6)}),
  };
  for (const auto& s : specs) {
    CAPTURE(s.N);
    Verdict v = qs_equal(cone_trace(s, order), theorem32_rhs(s, order));
    CHECK(v.equal);
    CHECK(v.checked_to == order);
  }
}

TEST_CASE("corner conventions at a = 0") {
  const Rat order = 6;
  const ConeSpec s = spec(kSynthetic, 2, {0, 0}, {ratio(1, 5), ratio(1, 6)});
  const QSeries tr = cone_trace(s, order);
  for (auto c : {CornerConvention::Unscaled, CornerConvention::Scaled}) {
    Verdict v = qs_equal(tr, theorem32_rhs(s, order, c));
    CHECK(!v.equal);
    CHECK(v.exponent == ratio(-1, 12));
  }
}

TEST_CASE("boundary rows are needed") {
  const Rat order = 8;
  ConeSpec s = spec(QuadData::standard(), 2, {ratio(1, 3), 0}, {ratio(1, 5), ratio(1, 7)});
  const QSeries bare = itheta_ab(s.qd, ShiftPair{s.a, s.b}, s.N, order + ratio(1, 12), {true})
                           .scaled(turn(-s.qd.B(s.a, s.b)) * CycNum(ratio(1, 2))) *
                       eta_quotient({{1, -2}}, order);
  CHECK(!qs_equal(cone_trace(s, order), bare).equal);
}

TEST_CASE("cone positivity checks") {
  CHECK_THROWS_AS(cone_trace(spec(QuadData::standard(), 1, {0, ratio(1, 2)}, {0, 0}), 4), InvalidConeData);
  CHECK_THROWS_AS(cone_trace(spec(QuadData::standard(), 1, {ratio(3, 2), 0}, {0, 0}), 4), InvalidConeData);
  CHECK_THROWS_AS(cone_trace(spec(QuadData{1, 1, 0, {0, 1}, {-1, 2}}, 1, {ratio(1, 2), 0}, {0, 0}), 4),
                  InvalidConeData);
  // c1^T A = (2, -1): not of the required shape
  CHECK_THROWS_AS(cone_trace(spec(QuadData{1, 1, 0, {1, -1}, {-1, 1}}, 1, {ratio(1, 2), ratio(1, 2)}, {0, 0}), 4),
                  InvalidConeData);
}
