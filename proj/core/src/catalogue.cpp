#include "umbral/catalogue.hpp"

#include <algorithm>

#include "umbral/appell.hpp"
#include "umbral/theta_forms.hpp"
#include "umbral/characters.hpp"
#include "umbral/cone.hpp"
#include "umbral/extraction.hpp"
#include "umbral/mckay_thompson.hpp"
#include "umbral/mock.hpp"
#include "umbral/modular.hpp"

namespace umbral {

namespace {

const Rat kHalf = ratio(1, 2);

QSeries pinf(const CycNum& root, const Rat& shift, const Rat& scale, const Rat& w) {
  return pochhammer({root, shift, scale, std::nullopt}, w);
}

QSeries mono(const Rat& e, const CycNum& c, const Rat& w) { return QSeries::monomial(e, c, w); }

std::string vec_str(const Vec2& v) { return v[0].get_str() + "," + v[1].get_str(); }

// ---- appendix

void add_appendix(std::vector<IdentityRecord>& out) {
  for (MockName m : all_mock_names()) {
    const std::string fn = mock_name_string(m);
    std::string notes;
    if (m == MockName::S0 || m == MockName::S1) {
      notes = "no theta form is printed; built from the T form and the S + 2T eta identity";
    } else if (m == MockName::V0) {
      notes = "defining sum read with (q;q^2)_n in the denominator; the printed (q;q^2)_{n+1} disagrees";
    }
    out.push_back({"appendix:" + fn + ":ab", "Appendix A", 20, notes, {"appendix"},
                   [m](const Rat& w) { return mock(m, w); },
                   [m](const Rat& w) { return mock_ab_form(m, w); }, {}, {}});
    IdentityRecord z{"appendix:" + fn + ":z", "Appendix A", 20, notes, {"appendix"},
                     [m](const Rat& w) { return mock_z_form(m, w); },
                     [m](const Rat& w) { return mock_ab_form(m, w); }, {}, {}};
    if (m == MockName::omega) {
      z.status_notes = "printed prefactor 1/eta(tau) replaced by 1/eta(2 tau), as in the (a,b) form";
      z.printed_lhs = [](const Rat& w) { return omega_z_form_misprint(w); };
      z.tags.push_back("typo");
    }
    out.push_back(std::move(z));
  }
}

// ---- order 8 mock thetas: eta identities and g2

void add_order8(std::vector<IdentityRecord>& out) {
  out.push_back({"lemma-4.1:S0", "Lemma 4.1", 25, "", {"lemma"},
                 [](const Rat& w) { return mock(MockName::S0, w) + mock(MockName::T0, w).scaled(2L); },
                 [](const Rat& w) { return (eta_x(w) + eta_y(w)).shift(ratio(1, 16)).scaled(kHalf); }, {}, {}});
  out.push_back({"lemma-4.1:S1", "Lemma 4.1", 25, "", {"lemma"},
                 [](const Rat& w) { return mock(MockName::S1, w) + mock(MockName::T1, w).scaled(2L); },
                 [](const Rat& w) { return (eta_y(w) - eta_x(w)).shift(ratio(-7, 16)).scaled(kHalf); }, {}, {}});

  // (x; -q)_inf = (x; q^2)_inf (-x q; q^2)_inf
  struct G2Parts {
    QSeries g0, g1, p0, p1, x, y;
  };
  auto parts = [](const Rat& w, bool printed) {
    const CycNum i = imag_unit();
    auto alt = [&](const CycNum& x, const Rat& s) { return pinf(x, s, 2, w) * pinf(-x, s + 1, 2, w); };
    QSeries common = alt(-i, kHalf).pow(2) * alt(-1L, 1) *
                     (pinf(-1L, 1, 4, w) * pinf(-1L, 3, 4, w) * pinf(1L, 4, 4, w)).inverse();
    if (!printed) common *= pinf(1L, 8, 8, w);
    G2Parts p;
    p.p0 = common * pinf(-1L, 3, 8, w) * pinf(-1L, 5, 8, w);
    p.p1 = common * pinf(-1L, 1, 8, w) * pinf(-1L, 7, 8, w);
    p.x = pinf(1L, kHalf, kHalf, w).pow(3) * (pinf(1L, 1, 1, w) * pinf(1L, 2, 2, w)).inverse();
    p.y = pinf(1L, 1, 1, w).pow(8) * (pinf(1L, kHalf, kHalf, w).pow(3) * pinf(1L, 2, 2, w).pow(4)).inverse();
    p.g0 = g2(i, kHalf, 4, w).shift(kHalf).scaled(i);
    p.g1 = g2(-i, ratio(3, 2), 4, w).shift(kHalf).scaled(i);
    return p;
  };
  using Side = std::function<QSeries(const G2Parts&)>;
  struct G2Row {
    MockName m;
    Side rhs;
  };
  const Rat quarter = ratio(1, 4);
  const std::vector<G2Row> rows = {
      {MockName::S0, [](const G2Parts& p) { return p.g0.scaled(-2L) + p.p0; }},
      {MockName::S1, [](const G2Parts& p) { return p.g1.scaled(-2L) + p.p1; }},
      {MockName::T0, [quarter](const G2Parts& p) { return p.g0 - p.p0.scaled(kHalf) + (p.x + p.y).scaled(quarter); }},
      {MockName::T1,
       [quarter](const G2Parts& p) { return p.g1 - p.p1.scaled(kHalf) + (p.y - p.x).shift(-kHalf).scaled(quarter); }},
  };
  for (const auto& row : rows) {
    const MockName m = row.m;
    const Side rhs = row.rhs;
    out.push_back({"g2:" + mock_name_string(m), "Lemma 4.1 (proof)", 20,
                   "the product terms need the factor (q^8;q^8)_inf, missing from the printed form",
                   {"g2", "typo"},
                   [m](const Rat& w) { return mock(m, w); },
                   [parts, rhs](const Rat& w) { return rhs(parts(w, false)); },
                   {},
                   [parts, rhs](const Rat& w) { return rhs(parts(w, true)); }});
  }

  // the odd components at lambency 8, after eliminating S0 and S1
  out.push_back({"lambency-8:odd-combination:eta", "Section 4.1", 20, "", {"lambency-8"},
                 [](const Rat& w) { return mt_series(*parse_mt_key("8:1A:1-7-3+5@2"), Route::MockTheta, w); },
                 [](const Rat& w) {
                   return mono(ratio(-1, 16), 8L, w) * mock(MockName::T0, w) +
                          mono(ratio(7, 16), 8L, w) * mock(MockName::T1, w) - eta_y(w).scaled(2L);
                 },
                 {}, {}});
}

// ---- characters

QSeries lemma51_bracket(const Rat& w, long hk_sign) {
  const QSeries ap = chi_clifford(1, kHalf, w), h = chi_heisenberg(1, w);
  return chi_k_twisted(1, w) * chi_l1(1, w) - ap.pow(2) * h.pow(2) * chi_k(kHalf, w) * chi_l1(kHalf, w) +
         (h * chi_k(1, w)).scaled(hk_sign) + ap * h.pow(2) * chi_k(kHalf, w);
}

void add_lemma51(std::vector<IdentityRecord>& out) {
  auto lhs = [](const Rat& w) {
    return eta_quotient({{kHalf, 1}, {2, 4}, {1, -2}, {4, -2}}, w) - eta_y(w);
  };
  auto rhs = [](long sign) {
    return [sign](const Rat& w) { return (chi_clifford(1, kHalf, w) * lemma51_bracket(w, sign)).scaled(2L); };
  };
  out.push_back({"lemma-5.1", "Lemma 5.1", 25, "the chi^H(tau) chi^K(tau) term enters with a minus sign; printed with plus",
                 {"lemma", "typo"}, lhs, rhs(-1), {}, rhs(1)});

  auto theta_sum = [](bool alternating) {
    return [alternating](const Rat& w) {
      SeriesBuilder sb;
      for (long n = 0; Rat(n * n) < w; ++n) {
        const long sign = alternating && n % 2 ? -1 : 1;
        sb.add(Rat(n * n), 0, n == 0 ? 1 : 2 * sign);
      }
      return sb.finish(w);
    };
  };
  out.push_back({"lemma-5.1:theta", "Lemma 5.1 (proof)", 25, "", {"lemma"},
                 [](const Rat& w) { return eta_quotient({{2, 5}, {1, -2}, {4, -2}}, w); }, theta_sum(false), {}, {}});
  out.push_back({"lemma-5.1:theta-alternating", "Lemma 5.1 (proof)", 25, "", {"lemma"},
                 [](const Rat& w) { return eta_quotient({{1, 2}, {2, -1}}, w); }, theta_sum(true), {}, {}});
}

// ---- cone traces and Appell-Lerch sums

const QuadData kSynthetic{2, 3, 2, {-2, 3}, {-3, 2}};

struct NamedForm {
  std::string tag;
  QuadData qd;
};

void add_cones(std::vector<IdentityRecord>& out) {
  struct Row {
    NamedForm f;
    long N;
    Vec2 a, b;
  };
  const NamedForm s{"std", QuadData::standard()}, al4{"al4", QuadData::appell_lerch(4)},
      al8{"al8", QuadData::appell_lerch(8)}, al9{"al9", QuadData::appell_lerch(9)}, syn{"syn", kSynthetic};
  const std::vector<Row> rows = {
      {s, 8, {ratio(5, 8), ratio(1, 8)}, {kHalf, 0}},
      {s, 1, {ratio(1, 4), ratio(1, 4)}, {0, 0}},
      {s, 4, {ratio(3, 4), kHalf}, {0, kHalf}},
      {s, 4, {ratio(1, 3), 0}, {ratio(1, 5), ratio(1, 7)}},
      {al4, 1, {ratio(1, 3), 0}, {ratio(1, 4), 0}},
      {al4, 8, {ratio(2, 3), ratio(1, 5)}, {ratio(1, 3), 0}},
      {al8, 4, {ratio(1, 5), ratio(1, 3)}, {ratio(1, 7), 0}},
      {al8, 1, {ratio(1, 2), 0}, {0, ratio(1, 3)}},
      {al9, 8, {ratio(2, 5), 0}, {ratio(1, 3), kHalf}},
      {al9, 1, {ratio(1, 4), ratio(1, 6)}, {0, 0}},
      {syn, 1, {ratio(1, 3), ratio(1, 5)}, {ratio(1, 7), ratio(2, 3)}},
      {syn, 1, {0, kHalf}, {ratio(1, 4), ratio(1, 3)}},
      {syn, 2, {0, 0}, {ratio(1, 5), ratio(1, 6)}},
  };
  for (const auto& r : rows) {
    const ConeSpec spec{r.f.qd, r.N, r.a, r.b};
    const bool boundary = r.a[0] == 0 || r.a[1] == 0;
    out.push_back({"theorem-3.2:" + r.f.tag + ":N=" + std::to_string(r.N) + ":a=" + vec_str(r.a) + ":b=" + vec_str(r.b),
                   "Theorem 3.2", 15,
                   r.a[0] == 0 && r.a[1] == 0 ? "corner term at a = 0 omitted (both printed readings fail)" : "",
                   {"theorem-3.2", boundary ? "boundary" : "interior"},
                   [spec](const Rat& w) { return cone_trace(spec, w); },
                   [spec](const Rat& w) { return theorem32_rhs(spec, w); }, {}, {}});
  }

  const std::string mu_note = "verified normalization: factor 1, extra phase e^{pi i b1}, theta argument at level N";
  const std::vector<std::pair<Point, Point>> mus = {
      {{ratio(1, 3), 0}, {ratio(1, 4), 0}},
      {{ratio(1, 5), ratio(1, 3)}, {kHalf, ratio(1, 4)}},
      {{ratio(1, 3), ratio(1, 5)}, {ratio(1, 4), ratio(1, 7)}},
  };
  for (const auto& [z1, z2] : mus) {
    for (long N : {1, 2}) {
      out.push_back({"cor-3.3:z1=" + z1.a.get_str() + "," + z1.b.get_str() + ":z2=" + z2.a.get_str() + "," +
                         z2.b.get_str() + ":N=" + std::to_string(N),
                     "Corollary 3.3", 12, mu_note, {"appell-lerch"},
                     [=](const Rat& w) { return mu(z1, z2, Rat(N), w); },
                     [=](const Rat& w) { return mu_via_cone(z1, z2, N, w); }, {}, {}});
    }
  }
  for (const Rat& a : {ratio(1, 3), ratio(-1, 3)}) {
    for (const Rat& b : {Rat(0), ratio(1, 4)}) {
      for (long N : {1, 2}) {
        const Point z{a, b};
        out.push_back({"cor-3.4:m=4:a=" + a.get_str() + ":b=" + b.get_str() + ":N=" + std::to_string(N),
                       "Corollary 3.4", 12, "printed form fails; verified form carries the row sum over Z + a",
                       {"appell-lerch", a > 0 ? "upper-strip" : "lower-strip"},
                       [=](const Rat& w) { return mu_m0_direct(4, z, Rat(N), w); },
                       [=](const Rat& w) { return mu_m0_via_cone(4, z, N, w); }, {}, {}});
      }
    }
  }
}

// ---- lambency 4 extraction and the McKay-Thompson routes

void add_extraction(std::vector<IdentityRecord>& out) {
  for (int r = 1; r <= 3; ++r) {
    const std::string base = "h4-3A:" + std::to_string(r);
    auto with = [r](ExtractionRoute route) { return [r, route](const Rat& w) { return h4_3a_extract(r, w, route); }; };
    out.push_back({base + ":mu=theta", "Section 4.2", 8, "", {"extraction", "lambency-4"},
                   with(ExtractionRoute::AppellLerch), with(ExtractionRoute::IndefiniteTheta), {}, {}});
    out.push_back({base + ":mu=characters", "Theorem 5.3", 8,
                   "the Clifford/Weyl character product equals minus psi", {"extraction", "lambency-4"},
                   with(ExtractionRoute::AppellLerch), with(ExtractionRoute::Characters), {}, {}});
  }
}

std::string route_citation(int lambency, Route rhs) {
  if (rhs == Route::IndefiniteTheta) {
    return lambency == 8 ? "Proposition, Section 4.1" : lambency == 12 ? "Proposition, Section 4.2" : "Proposition, Section 4.3";
  }
  return lambency == 8 ? "Theorem 5.2" : lambency == 12 ? "Theorem 5.3" : "Theorem 5.4";
}

SeriesFn route_fn(const MTKey& key, Route r) {
  return [key, r](const Rat& w) { return mt_series(key, r, w); };
}

void attach_printed(IdentityRecord& rec, const MTKey& key, Route rhs) {
  const std::string label = key.label();
  auto typo = [&](std::string notes) {
    rec.status_notes = std::move(notes);
    rec.tags.push_back("typo");
  };
  if (label == "8:1A:2" && rhs == Route::IndefiniteTheta) {
    typo("prefactor 4q^{-1/8} agrees with the indefinite theta route; 4q^{-1/4} printed alongside disagrees");
    rec.printed_lhs = [](const Rat& w) { return mono(ratio(-1, 4), 4L, w) * mock(MockName::A, w); };
  } else if (label == "8:4A:1-7-3+5@2" && rhs == Route::Modules) {
    typo("eta(tau/2) eta(2 tau)^4 / (eta(tau)^2 eta(4 tau)^2) wins; the eta(tau)^4 variant fails against the modules");
    rec.printed_lhs = [](const Rat& w) {
      return eta_quotient({{kHalf, 1}, {1, 4}, {1, -2}, {4, -2}}, w).scaled(-2L);
    };
  } else if (label == "8:1A:1-7-3+5@2" && rhs == Route::IndefiniteTheta) {
    typo("the second theta enters with +i; printed with -i");
    rec.printed_rhs = [](const Rat& w) {
      const QSeries th = itheta_ab(QuadData::standard(), {{ratio(5, 8), ratio(1, 8)}, {kHalf, 0}}, 8, w) -
                         itheta_ab(QuadData::standard(), {{ratio(7, 8), ratio(3, 8)}, {kHalf, 0}}, 8, w).scaled(imag_unit());
      return (eta_quotient({{4, 1}, {2, -1}, {8, -1}}, w) * th).scaled(CycNum(4L) * turn(ratio(-3, 8))) -
             eta_y(w).scaled(2L);
    };
  } else if (label == "12:1A:4" && rhs == Route::IndefiniteTheta) {
    typo("prefactor 1/eta(2 tau), as for omega; printed 1/eta(tau)");
    rec.printed_rhs = [](const Rat& w) {
      const QSeries th = itheta_ab(QuadData::standard(), {{kHalf, ratio(1, 3)}, {0, kHalf}}, 6, w);
      return (eta_quotient({{1, -1}}, w) * th).scaled(CycNum(2L) * turn(ratio(-1, 4))) +
             eta_quotient({{6, 4}, {2, -1}, {3, -2}}, w).scaled(2L);
    };
  } else if (label == "12:1A:6@3" && rhs == Route::IndefiniteTheta) {
    typo("H_6(3 tau) = -4q^{-1/4} sigma(q^3) + H_{3A,2}(tau); printed with q^{1/4} and -H_{3A,2}");
    rec.printed_lhs = [](const Rat& w) {
      return mono(ratio(1, 4), -4L, w) * mock(MockName::sigma, w / 3).rescale(3) -
             h4_3a_extract(2, w, ExtractionRoute::AppellLerch);
    };
  } else if ((label == "16:1A:2" || label == "16:1A:6") && rhs == Route::IndefiniteTheta) {
    const bool two = label == "16:1A:2";
    typo(two ? "tau -> tau - 1/2 multiplies by e^{pi i/16}, dropped in print"
             : "tau -> tau - 1/2 multiplies by e^{9 pi i/16}, dropped in print");
    rec.printed_rhs = [key, two](const Rat& w) {
      return mt_series(key, Route::IndefiniteTheta, w).scaled(turn(two ? ratio(-1, 32) : ratio(-9, 32)));
    };
  } else if (label == "16:1A:4" && rhs == Route::IndefiniteTheta) {
    typo("prefactor -2i e^{-3 pi i/8}; printed 2i e^{-3 pi i/8}");
    rec.printed_rhs = [key](const Rat& w) { return -mt_series(key, Route::IndefiniteTheta, w); };
  }
}

void add_routes(std::vector<IdentityRecord>& out) {
  for (const MTKey& key : mt_keys()) {
    const std::string lam = "lambency-" + std::to_string(key.lambency);
    for (Route rhs : {Route::IndefiniteTheta, Route::Modules}) {
      IdentityRecord rec{"route:" + key.label() + ":R1=" + route_name(rhs),
                         route_citation(key.lambency, rhs),
                         10,
                         "",
                         {"route", lam},
                         route_fn(key, Route::MockTheta),
                         route_fn(key, rhs),
                         {},
                         {}};
      attach_printed(rec, key, rhs);
      out.push_back(std::move(rec));
    }
  }
}

std::vector<IdentityRecord> build_catalogue() {
  std::vector<IdentityRecord> out;
  add_appendix(out);
  add_order8(out);
  add_lemma51(out);
  add_cones(out);
  add_extraction(out);
  add_routes(out);
  return out;
}

}  // namespace

const std::vector<IdentityRecord>& catalogue() {
  static const std::vector<IdentityRecord> c = build_catalogue();
  return c;
}

std::vector<const IdentityRecord*> select_records(const std::string& selector) {
  std::vector<const IdentityRecord*> out;
  const auto& all = catalogue();
  for (const auto& r : all) {
    if (r.name == selector) return {&r};
  }
  for (const auto& r : all) {
    const bool tagged = std::find(r.tags.begin(), r.tags.end(), selector) != r.tags.end();
    if (selector == "all" || r.name.rfind(selector, 0) == 0 || tagged) out.push_back(&r);
  }
  return out;
}

const char* status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Pass:
      return "pass";
    case VerifyStatus::Mismatch:
      return "mismatch";
    case VerifyStatus::Error:
      return "error";
  }
  return "?";
}

VerifyReport verify(const IdentityRecord& record, const VerifyOptions& opt) {
  VerifyReport rep;
  rep.name = record.name;
  rep.citation = record.citation;
  rep.order = opt.order ? *opt.order : record.default_order;
  SeriesFn lhs = record.lhs, rhs = record.rhs;
  if (opt.strict_typos) {
    if (record.printed_lhs) lhs = record.printed_lhs;
    if (record.printed_rhs) rhs = record.printed_rhs;
    rep.used_printed = record.has_printed_variant();
  }
  try {
    const QSeries a = ensure_order(lhs, rep.order);
    QSeries b = ensure_order(rhs, rep.order);
    if (opt.fault_at && *opt.fault_at < rep.order) b += QSeries::monomial(*opt.fault_at, 1L, rep.order);
    const Verdict v = qs_equal(a, b);
    if (v.equal) {
      rep.checked_to = v.checked_to;
    } else {
      rep.status = VerifyStatus::Mismatch;
      rep.exponent = v.exponent;
      rep.lhs_coeff = v.lhs;
      rep.rhs_coeff = v.rhs;
    }
  } catch (const std::exception& e) {
    rep.status = VerifyStatus::Error;
    rep.error = record.name + ": " + e.what();
  }
  return rep;
}

}  // namespace umbral
