#include <doctest.h>

#include <set>

#include "umbral/catalogue.hpp"
#include "umbral/functions.hpp"
#include "umbral/mckay_thompson.hpp"

using namespace umbral;

TEST_CASE("keys round trip through their labels") {
  CHECK(mt_keys().size() == 37);
  std::set<std::string> labels;
  for (const MTKey& k : mt_keys()) {
    auto back = parse_mt_key(k.label());
    REQUIRE(back);
    CHECK(back->label() == k.label());
    labels.insert(k.label());
  }
  CHECK(labels.size() == mt_keys().size());
  for (const std::string bad : {"8:3A:2", "9:1A:2", "8:1A:1-7-3+9@2", "8:1A:2x", "12:1A:", "16:1A:2@0", "8A:1A:2"}) {
    CAPTURE(bad);
    CHECK(!parse_mt_key(bad));
  }
  MTKey clash{12, "1A", {{1, 1}, {1, 7}}, 1};
  CHECK_THROWS_AS(clash.validate(), std::invalid_argument);
}

TEST_CASE("routes agree at low order") {
  const Rat order = 4;
  for (const MTKey& k : mt_keys()) {
    CAPTURE(k.label());
    const QSeries r1 = mt_series(k, Route::MockTheta, order);
    CHECK(r1.valid_to() == order);
    CHECK(r1 == mt_series(k, Route::IndefiniteTheta, order));
    CHECK(r1 == mt_series(k, Route::Modules, order));
  }
}

TEST_CASE("leading terms of single components") {
  // 4 q^{1/2} B(q), B(q) = 1 + ...
  const QSeries h4 = mt_series(*parse_mt_key("8:1A:4"), Route::MockTheta, 3);
  CHECK(h4.min_exp() == ratio(1, 2));
  CHECK(h4.coeff(ratio(1, 2)) == CycNum(4L));
  // V0(q) = 1 + ...
  const QSeries h8 = mt_series(*parse_mt_key("16:1A:8"), Route::Modules, 3);
  CHECK(h8.min_exp() == 0);
  CHECK(h8.coeff(0) == CycNum(1L));
}

TEST_CASE("residue projections partition the combined series") {
  for (const MTKey& k : mt_keys()) {
    if (k.parts.size() < 2) continue;
    CAPTURE(k.label());
    const QSeries comb = mt_series(k, Route::MockTheta, 6);
    const QSeries base = comb.rescale(1 / k.rescale);
    QSeries sum = QSeries::zero(base.valid_to());
    for (const auto& [part, h] : split_components(k, comb)) {
      sum += part.sign < 0 ? -h : h;
      CHECK(project_residue(h, k.lambency, part.r) == h);
    }
    CHECK(sum == base);
    // a class used by no part
    CHECK(project_residue(base, k.lambency, 2).is_zero());
  }
}

TEST_CASE("catalogue shape") {
  CHECK(catalogue().size() >= 40);
  CHECK(select_records("appendix").size() == 26);
  CHECK(select_records("lemma-5.1").size() == 1);
  CHECK(select_records("no-such-thing").empty());
  CHECK(select_records("all").size() == catalogue().size());
  std::set<std::string> names;
  for (const auto& r : catalogue()) {
    CHECK(!r.citation.empty());
    CHECK(r.default_order > 0);
    names.insert(r.name);
  }
  CHECK(names.size() == catalogue().size());
}

TEST_CASE("verification reports") {
  const IdentityRecord& f = *select_records("appendix:f:ab").front();
  VerifyReport ok = verify(f);
  CHECK(ok.status == VerifyStatus::Pass);
  CHECK(ok.checked_to == 20);
  CHECK(ok.citation == f.citation);

  const IdentityRecord& l51 = *select_records("lemma-5.1").front();
  VerifyOptions faulty;
  faulty.fault_at = Rat(2);
  VerifyReport bad = verify(l51, faulty);
  CHECK(bad.status == VerifyStatus::Mismatch);
  CHECK(bad.exponent == 2);
  CHECK(bad.lhs_coeff == bad.rhs_coeff - CycNum(1L));

  VerifyOptions strict;
  strict.strict_typos = true;
  VerifyReport printed = verify(l51, strict);
  CHECK(printed.used_printed);
  CHECK(printed.status == VerifyStatus::Mismatch);
}

TEST_CASE("named functions") {
  const Expansion e = expand_function("eta", {}, 5);
  CHECK(e.q.term_count() == 3);
  CHECK(e.q.min_exp() == ratio(1, 24));
  CHECK(!e.jacobi);
  CHECK(expand_function("theta_m_r", {{"m", "2"}, {"r", "1"}}, 3).jacobi);
  CHECK_THROWS_AS(expand_function("nope", {}, 5), ParamError);
  CHECK_THROWS_AS(expand_function("eta", {{"z", "1"}}, 5), ParamError);
  CHECK_THROWS_AS(expand_function("mu_m0", {{"m", "4"}}, 5), ParamError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParamError);
  CHECK(parse_rational("-6/4") == ratio(-3, 2));
  for (const char* n : {"eta", "theta1", "theta_m_r", "mock:A", "mock:V1", "g2", "mu", "mu_m0", "mu_m0_k", "cone_trace",
                        "chi:H", "chi:A+", "chi:A-", "chi:Atw", "chi:Weyl", "chi:L1", "chi:K", "chi:Ktw", "chi:L1coset"}) {
    CHECK(find_function(n));
  }
}
