// One line per acceptance criterion; exit status 1 if any fails.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "umbral/appell.hpp"
#include "umbral/catalogue.hpp"
#include "umbral/cone.hpp"
#include "umbral/extraction.hpp"
#include "umbral/indefinite.hpp"
#include "umbral/mckay_thompson.hpp"
#include "umbral/modular.hpp"

using namespace umbral;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void fail(const std::string& what) {
    if (ok) detail.str("");
    if (!ok) detail << "; ";
    ok = false;
    detail << what;
  }
};

std::string verdict_text(const Verdict& v) {
  if (v.equal) return "equal to q^" + v.checked_to.get_str();
  return "mismatch at q^" + v.exponent.get_str() + " (" + v.lhs.to_string() + " vs " + v.rhs.to_string() + ")";
}

// Runs catalogue records at a fixed order; returns how many ran.
std::size_t run_records(const std::string& selector, const Rat& order, Outcome& out) {
  const auto recs = select_records(selector);
  VerifyOptions opt;
  opt.order = order;
  for (const auto* r : recs) {
    const VerifyReport rep = verify(*r, opt);
    if (rep.status == VerifyStatus::Pass && rep.checked_to == order) continue;
    out.fail(r->name + ": " + status_name(rep.status) +
             (rep.status == VerifyStatus::Mismatch ? " at q^" + rep.exponent.get_str() : rep.error));
  }
  return recs.size();
}

bool integral(const QSeries& s, bool even) {
  bool ok = true;
  s.for_each_term([&](const Rat&, const CycNum& c) {
    const auto z = c.to_integer();
    if (!z || (even && mpz_even_p(z->get_mpz_t()) == 0)) ok = false;
  });
  return ok;
}

// ---- 1
void theorem32(Outcome& out) {
  std::set<long> levels;
  std::set<std::string> forms;
  bool interior = false, boundary = false;
  for (const auto* r : select_records("theorem-3.2")) {
    const std::string& n = r->name;
    forms.insert(n.substr(12, n.find(':', 12) - 12));
    const auto np = n.find(":N=") + 3;
    levels.insert(std::stol(n.substr(np, n.find(':', np) - np)));
    for (const auto& t : r->tags) {
      interior |= t == "interior";
      boundary |= t == "boundary";
    }
  }
  const std::size_t count = run_records("theorem-3.2", 15, out);
  for (const char* f : {"std", "al4", "al8", "al9"}) {
    if (!forms.count(f)) out.fail(std::string("no instance of form ") + f);
  }
  for (long N : {1, 4, 8}) {
    if (!levels.count(N)) out.fail("no instance at N = " + std::to_string(N));
  }
  if (!interior || !boundary) out.fail("interior and boundary shifts both required");
  if (count < 6) out.fail("fewer than 6 instances");
  if (out.ok) out.detail << count << " cone specs to q^15";
}

// ---- 2
void cor34(Outcome& out) {
  int n = 0;
  for (const Rat& a : {ratio(1, 3), ratio(-1, 3)}) {
    for (const Rat& b : {Rat(0), ratio(1, 4)}) {
      for (long N : {1, 2}) {
        const Point z{a, b};
        const Verdict v = qs_equal(mu_m0_direct(4, z, Rat(N), 12), mu_m0_via_cone(4, z, N, 12));
        ++n;
        if (!v.equal || v.checked_to != 12) {
          out.fail("a=" + a.get_str() + " b=" + b.get_str() + " N=" + std::to_string(N) + ": " + verdict_text(v));
        }
      }
    }
  }
  if (out.ok) out.detail << n << " cases, both strips, to q^12";
}

// ---- 3
void appendix(Outcome& out) {
  const std::size_t count = run_records("appendix", 20, out);
  if (count != 26) out.fail("expected 26 appendix identities, found " + std::to_string(count));
  if (out.ok) out.detail << "13 functions, sum = (a,b) form and z form = (a,b) form, to q^20";
}

// ---- 4
void lemmas(Outcome& out) {
  std::size_t count = 0;
  for (const char* name : {"lemma-4.1:S0", "lemma-4.1:S1", "lemma-5.1"}) count += run_records(name, 25, out);
  if (count != 3) out.fail("lemma records missing");
  if (out.ok) out.detail << "S0 + 2T0, S1 + 2T1 and the character identity to q^25";
}

// ---- 5
void routes(Outcome& out) {
  const Rat order = 10;
  for (const MTKey& k : mt_keys()) {
    const QSeries r1 = mt_series(k, Route::MockTheta, order);
    for (Route r : {Route::IndefiniteTheta, Route::Modules}) {
      const Verdict v = qs_equal(r1, mt_series(k, r, order));
      if (!v.equal || v.checked_to != order) out.fail(k.label() + " R1 vs " + route_name(r) + ": " + verdict_text(v));
    }
  }
  if (out.ok) out.detail << mt_keys().size() << " keys, R1 = R2 = R3 to q^10";
}

// ---- 6
void polar(Outcome& out) {
  struct Case {
    const char* key;
    Rat exp;
  };
  for (const Case& c : {Case{"8:1A:1-7-3+5@2", ratio(-1, 16)}, Case{"12:1A:1-11@2", ratio(-1, 24)},
                        Case{"16:1A:1-3+5-7+9-11+13-15@8", ratio(-1, 8)}}) {
    for (Route r : all_routes()) {
      const QSeries s = mt_series(*parse_mt_key(c.key), r, 2);
      if (s.min_exp() != c.exp || s.coeff(c.exp) != CycNum(-2L)) {
        out.fail(std::string(c.key) + " " + route_name(r) + " starts at " + s.coeff(s.min_exp()).to_string() + " q^" +
                 s.min_exp().get_str());
      }
    }
  }
  if (out.ok) out.detail << "-2q^{-1/16}, -2q^{-1/24}, -2q^{-1/8} on all routes";
}

// ---- 7
void structural(Outcome& out) {
  int checks = 0;
  // integer shifts of the characteristic a
  const QuadData synthetic{2, 3, 2, {-2, 3}, {-3, 2}};
  const std::vector<std::pair<QuadData, ShiftPair>> data = {
      {QuadData::standard(), {{ratio(1, 4), ratio(1, 4)}, {0, 0}}},
      {QuadData::standard(), {{ratio(2, 3), ratio(1, 6)}, {ratio(1, 2), 0}}},
      {QuadData::appell_lerch(4), {{ratio(1, 3), ratio(1, 5)}, {ratio(1, 4), 0}}},
      {synthetic, {{ratio(1, 5), ratio(3, 4)}, {ratio(1, 3), ratio(1, 6)}}},
  };
  std::mt19937 rng(20261014);
  std::uniform_int_distribution<long> step(-4, 4);
  for (const auto& [qd, sp] : data) {
    const QSeries base = itheta_ab(qd, sp, 1, 10);
    for (int i = 0; i < 3; ++i) {
      ShiftPair moved = sp;
      moved.a[0] += step(rng);
      moved.a[1] += step(rng);
      ++checks;
      if (itheta_ab(qd, moved, 1, 10) != base) out.fail("theta changed under an integer shift of a");
    }
  }
  // mu_{m,0}(-z) = -mu_{m,0}(z)
  for (long m : {4, 8}) {
    for (const Point& z : {Point{ratio(1, 5), ratio(1, 7)}, Point{ratio(1, 3), 0}, Point{ratio(-2, 5), ratio(1, 4)}}) {
      ++checks;
      if (mu_m0(m, {-z.a, -z.b}, 1, 12) != -mu_m0(m, z, 1, 12)) out.fail("mu_{m,0} not odd");
    }
  }
  // residue classes partition every combined series
  for (const MTKey& k : mt_keys()) {
    if (k.parts.size() < 2) continue;
    const QSeries comb = mt_series(k, Route::MockTheta, 10);
    const QSeries base = comb.rescale(1 / k.rescale);
    QSeries sum = QSeries::zero(base.valid_to());
    for (const auto& [part, h] : split_components(k, comb)) sum += part.sign < 0 ? -h : h;
    ++checks;
    if (sum != base) out.fail(k.label() + ": projections do not reassemble the series");
  }
  // Jacobi triple product
  ++checks;
  if (theta1_product(-13, 13, 15) != theta_symbolic(-13, 13, 15).reflect()) out.fail("theta_1 product != sum to q^15");
  // pentagonal numbers
  SeriesBuilder sb;
  for (long k = -10; k <= 10; ++k) {
    const Rat e = ratio(k * (3 * k - 1), 2) + ratio(1, 24);
    if (e < 25) sb.add(e, 0, k % 2 ? -1 : 1);
  }
  ++checks;
  if (eta(1, 25) != sb.finish(25)) out.fail("eta != pentagonal series to q^25");
  // extracted components: even integers; every McKay-Thompson component: integers
  for (ExtractionRoute r : {ExtractionRoute::AppellLerch, ExtractionRoute::IndefiniteTheta, ExtractionRoute::Characters}) {
    for (const QSeries& h : h4_3a_components(r, 10).h) {
      ++checks;
      if (!integral(h, true)) out.fail("extracted H_{3A} coefficient not an even integer");
    }
  }
  for (const MTKey& k : mt_keys()) {
    for (const auto& [part, h] : split_components(k, mt_series(k, Route::Modules, 10))) {
      ++checks;
      if (!integral(h, false)) out.fail(k.label() + ": component r=" + std::to_string(part.r) + " not integral");
    }
  }
  if (out.ok) out.detail << checks << " structural checks";
}

// ---- 8
void fault(Outcome& out, const char* cli) {
  VerifyOptions opt;
  for (const auto& [name, at] : {std::pair<std::string, Rat>{"lemma-5.1", 2}, {"appendix:f:ab", ratio(5, 2)},
                                  {"route:12:1A:1-11@2:R1=R3", ratio(23, 24)}}) {
    opt.fault_at = at;
    const VerifyReport rep = verify(*select_records(name).front(), opt);
    if (rep.status != VerifyStatus::Mismatch || rep.exponent != at) {
      out.fail(name + ": perturbation at q^" + at.get_str() + " reported as " + status_name(rep.status) + " q^" +
               rep.exponent.get_str());
    }
  }
  if (cli) {
    const std::string cmd = std::string(cli) + " verify lemma-5.1 --inject-fault 2 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    std::string text;
    char buf[512];
    while (p && fgets(buf, sizeof buf, p)) text += buf;
    const int status = p ? pclose(p) : -1;
    const int rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (rc != 1) out.fail("command line exit code " + std::to_string(rc) + ", expected 1");
    if (text.find("first mismatch at q^{2}") == std::string::npos) out.fail("command line did not report q^{2}");
  }
  if (out.ok) out.detail << "mismatch located at the perturbed exponent" << (cli ? ", command line exits 1" : "");
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> all = {
      {1, "cone trace = indefinite theta form", 30, theorem32},
      {2, "mu_{m,0} through cone traces", 30, cor34},
      {3, "mock theta representations", 180, appendix},
      {4, "S + 2T eta identities and character identity", 20, lemmas},
      {5, "route equality", 600, routes},
      {6, "polar terms", 30, polar},
      {7, "structural properties", 120, structural},
      {8, "fault injection", 30, [cli](Outcome& o) { fault(o, cli); }},
  };
  bool all_ok = true;
  for (const auto& c : all) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("threw: ") + e.what());
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > c.budget_s) o.fail("took " + std::to_string(dt) + " s, budget " + std::to_string(c.budget_s) + " s");
    all_ok &= o.ok;
    std::printf("criterion %d: %s  %s  (%.2f s)  %s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, dt, o.detail.str().c_str());
  }
  return all_ok ? 0 : 1;
}
