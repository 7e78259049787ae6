#include "umbral/mckay_thompson.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "umbral/theta_forms.hpp"
#include "umbral/characters.hpp"
#include "umbral/cone.hpp"
#include "umbral/extraction.hpp"
#include "umbral/mock.hpp"
#include "umbral/modular.hpp"

namespace umbral {

namespace {

const Rat kHalf = ratio(1, 2);

CycNum ph(long p, long q) { return turn(ratio(p, q)); }

// Table 1: traces of A1, A2, B1, B2, E on the classes of Dih4.
struct Dih4Traces {
  int a1, a2, b1, b2, e;
};

const std::map<std::string, Dih4Traces>& dih4() {
  static const std::map<std::string, Dih4Traces> t = {
      {"1A", {1, 1, 1, 1, 2}},   {"2A", {1, 1, 1, 1, -2}}, {"2B", {1, -1, -1, 1, 0}},
      {"2C", {1, -1, 1, -1, 0}}, {"4A", {1, 1, -1, -1, 0}},
  };
  return t;
}

// Working context: every building block valid to w.
struct Ctx {
  Rat w;

  QSeries mono(const Rat& e, const CycNum& c = 1L) const { return QSeries::monomial(e, c, w); }
  QSeries etaq(const std::vector<std::pair<Rat, long>>& f) const { return eta_quotient(f, w); }
  QSeries mock(MockName m) const { return umbral::mock(m, w); }
  QSeries theta(const Vec2& a, const Vec2& b, long N) const {
    return itheta_ab(QuadData::standard(), {a, b}, N, w);
  }
  // T^{(N)}_{a,b}(c tau) of the standard form
  QSeries trace(long N, const Vec2& a, const Vec2& b, const Rat& c = 1) const {
    return cone_trace(ConeSpec{QuadData::standard(), N, a, b}, w / c).rescale(c);
  }
  QSeries ap(const Rat& c) const { return chi_clifford(1, c, w); }
  QSeries am(const Rat& c) const { return chi_clifford(-1, c, w); }
  QSeries heis(const Rat& c) const { return chi_heisenberg(c, w); }
  QSeries k(const Rat& c) const { return chi_k(c, w); }
  QSeries kt(const Rat& c) const { return chi_k_twisted(c, w); }
  QSeries l1(const Rat& c) const { return chi_l1(c, w); }
};

ExtractionRoute extraction_for(Route r) {
  switch (r) {
    case Route::MockTheta:
      return ExtractionRoute::AppellLerch;
    case Route::IndefiniteTheta:
      return ExtractionRoute::IndefiniteTheta;
    case Route::Modules:
      break;
  }
  return ExtractionRoute::Characters;
}

// ((H_1 - H_3) / 2)(2 tau / 3) and H_2 of class 3A at lambency 4.
QSeries odd_3a(Route r, const Rat& w) {
  const auto c = h4_3a_components(extraction_for(r), w * ratio(3, 2));
  return (c.h[0] - c.h[2]).scaled(kHalf).rescale(ratio(2, 3));
}
QSeries even_3a(Route r, const Rat& w) { return h4_3a_extract(2, w, extraction_for(r)); }

// ---- lambency 8

QSeries lambency8(const Ctx& c, const std::string& cls, const std::string& line, Route route) {
  const Dih4Traces& t = dih4().at(cls);
  if (line == "2" || line == "4") {
    const bool two = line == "2";
    if (route == Route::Modules) {
      const QSeries s = two ? c.ap(4) * c.ap(1).pow(2) * c.heis(2).pow(2) *
                                  c.trace(4, {ratio(3, 4), ratio(1, 4)}, {0, kHalf})
                            : c.ap(2) * c.heis(1) * c.heis(4) * c.ap(1).pow(2) *
                                  c.trace(4, {ratio(3, 4), kHalf}, {0, kHalf});
      return s.scaled(2L * t.e);
    }
    // pairing for 2A; the other classes vanish on even components
    const long factor = cls == "1A" ? 1 : cls == "2A" ? -1 : 0;
    if (factor == 0) return QSeries::zero(c.w);
    QSeries s;
    if (route == Route::MockTheta) {
      s = two ? c.mono(ratio(-1, 8), 4L) * c.mock(MockName::A) : c.mono(kHalf, 4L) * c.mock(MockName::B);
    } else {
      s = two ? c.etaq({{4, 1}, {2, -2}}) * c.theta({ratio(3, 4), ratio(1, 4)}, {0, kHalf}, 4)
              : c.etaq({{2, 1}, {1, -1}, {4, -1}}) * c.theta({ratio(3, 4), kHalf}, {0, kHalf}, 4);
      s = s.scaled(CycNum(2L) * ph(-3, 8));
    }
    return s.scaled(factor);
  }

  // (H_1 - H_7 - H_3 + H_5)(2 tau)
  const QSeries eta_z = c.etaq({{kHalf, 1}, {2, 4}, {1, -2}, {4, -2}});
  const QSeries eta_y = c.etaq({{1, 8}, {kHalf, -3}, {2, -4}});
  const bool bc = cls == "2B" || cls == "2C";
  switch (route) {
    case Route::MockTheta: {
      if (cls == "4A") return eta_z.scaled(-2L);
      const QSeries s0 = c.mock(MockName::S0), s1 = c.mock(MockName::S1);
      if (bc) return (c.mono(ratio(-1, 16)) * s0 + c.mono(ratio(7, 16)) * s1).scaled(-2L);
      const QSeries t0 = c.mock(MockName::T0), t1 = c.mock(MockName::T1);
      return c.mono(ratio(-1, 16)) * (t0.scaled(4L) - s0.scaled(2L)) - c.mono(ratio(7, 16)) * (s1.scaled(2L) - t1.scaled(4L));
    }
    case Route::IndefiniteTheta: {
      if (cls == "4A") return eta_z.scaled(-2L);
      const QSeries th = c.theta({ratio(5, 8), ratio(1, 8)}, {kHalf, 0}, 8) +
                         c.theta({ratio(7, 8), ratio(3, 8)}, {kHalf, 0}, 8).scaled(imag_unit());
      const QSeries pre = c.etaq({{4, 1}, {2, -1}, {8, -1}});
      // 8 (resp. 4) times e^{-3 pi i / 4} eta(4 tau) / (2 eta(2 tau) eta(8 tau))
      return (pre * th).scaled(CycNum(bc ? 2L : 4L) * ph(-3, 8)) - eta_y.scaled(2L);
    }
    case Route::Modules:
      break;
  }
  const Rat h = kHalf;
  const QSeries first = c.ap(4) * c.heis(2) * c.heis(8) * c.ap(1) *
                        (c.ap(1) * c.trace(8, {ratio(5, 8), ratio(1, 8)}, {h, 0}) +
                         c.am(1) * c.trace(8, {ratio(7, 8), ratio(3, 8)}, {h, 0}));
  const QSeries bracket = c.kt(1) * c.l1(1) + c.am(h) * c.ap(h) * c.heis(1).pow(2) * c.k(h) * c.l1(h) -
                          c.heis(1) * c.k(1) + c.ap(h) * c.heis(1).pow(2) * c.k(h);
  const QSeries mid = (c.am(h).scaled(long(t.a1 + t.a2)) + c.ap(h).scaled(long(t.b1 + t.b2))) * bracket;
  const QSeries last = c.am(1) * c.ap(1).pow(7) * c.heis(h).pow(3) * c.heis(2).pow(4);
  return first.scaled(2L * (2 * t.a1 + t.b1 + t.b2)) + mid + last.scaled(2L * t.a1);
}

// ---- lambency 12

QSeries lambency12(const Ctx& c, const std::string& line, Route route, int tr_a, int tr_b) {
  const Rat h = kHalf;
  const bool odd = line == "1-11@2" || line == "5-7@2";
  const QSeries o4 = odd ? odd_3a(route, c.w) : QSeries::zero(c.w);
  const QSeries e3 = line == "6@3" ? even_3a(route, c.w) : QSeries::zero(c.w);
  const int pm = line == "1-11@2" ? 1 : -1;
  switch (route) {
    case Route::MockTheta: {
      if (line == "2") return c.mono(ratio(-1, 12), -2L) * c.mock(MockName::sigma);
      if (line == "4") return c.mono(ratio(2, 3), 2L) * c.mock(MockName::omega);
      if (line == "6@3") return c.mono(ratio(-1, 4), -4L) * umbral::mock(MockName::sigma, c.w / 3).rescale(3) + e3;
      const QSeries psi = c.mono(ratio(-3, 8), -1L) * c.mock(MockName::psi6);
      if (line == "3-9@2") return psi.scaled(2L);
      return psi - (c.mono(ratio(-1, 24)) * c.mock(MockName::f)).scaled(long(pm)) + o4;
    }
    case Route::IndefiniteTheta: {
      if (line == "2") {
        return (c.etaq({{2, 1}, {3, 1}, {1, -1}, {6, -2}}) * c.theta({h, ratio(1, 6)}, {0, h}, 6)).scaled(-ph(-1, 4));
      }
      if (line == "4") {
        return (c.etaq({{2, -1}}) * c.theta({h, ratio(1, 3)}, {0, h}, 6)).scaled(CycNum(2L) * ph(-1, 4)) +
               c.etaq({{6, 4}, {2, -1}, {3, -2}}).scaled(2L);
      }
      if (line == "6@3") {
        return (c.etaq({{6, 1}, {9, 1}, {3, -1}, {18, -2}}) * c.theta({h, ratio(1, 6)}, {0, h}, 18))
                   .scaled(CycNum(-2L) * ph(-1, 4)) +
               e3;
      }
      // -e^{-7 pi i / 6} eta(tau) eta(6 tau) / (2 eta(2 tau) eta(3 tau)^2) Theta
      const QSeries ta = (c.etaq({{1, 1}, {6, 1}, {2, -1}, {3, -2}}) * c.theta({ratio(1, 3), h}, {h, h}, 3))
                             .scaled(CycNum(ratio(-1, 2)) * ph(-7, 12));
      if (line == "3-9@2") return ta.scaled(2L);
      const QSeries tb = (c.etaq({{1, -1}}) * c.theta({ratio(2, 3), ratio(1, 6)}, {h, 0}, 3)).scaled(CycNum(2L) * ph(-5, 12));
      const QSeries eq = c.etaq({{3, 4}, {1, -1}, {6, -2}});
      return ta + (tb - eq).scaled(long(pm)) + o4;
    }
    case Route::Modules:
      break;
  }
  if (line == "2") {
    return (c.heis(6).pow(2) * c.am(1) * c.ap(2) * c.ap(3) * c.trace(6, {h, ratio(1, 6)}, {0, h})).scaled(2L * tr_b);
  }
  if (line == "4") {
    return (c.ap(1).pow(2) * c.heis(2) * c.trace(6, {h, ratio(1, 3)}, {0, h}).scaled(4L) +
            c.ap(6).pow(4) * c.heis(2) * c.heis(3).pow(2).scaled(2L))
        .scaled(long(tr_b));
  }
  if (line == "6@3") {
    return (c.am(6) * c.ap(9) * c.ap(1).pow(2) * c.heis(3) * c.heis(18).pow(2) *
                c.trace(18, {h, ratio(1, 6)}, {0, h}).scaled(4L) +
            e3)
        .scaled(long(tr_b));
  }
  const QSeries ta = c.am(1) * c.ap(h).pow(2) * c.ap(6) * c.heis(2) * c.heis(3).pow(2) *
                     c.trace(6, {ratio(1, 3), h}, {h, h}, h);
  if (line == "3-9@2") return ta.scaled(2L * tr_a);
  const QSeries tb = c.heis(1) * c.trace(6, {ratio(2, 3), ratio(1, 6)}, {h, 0}, h).scaled(4L);
  const QSeries rest = line == "1-11@2"
                           ? c.ap(h).pow(2) * tb + c.ap(3).pow(3) * c.am(3) * c.heis(1) * c.heis(6).pow(2)
                           : c.am(h) * c.ap(h) * tb + c.ap(3).pow(4) * c.heis(1) * c.heis(6).pow(2);
  return (ta + rest + o4).scaled(long(tr_a));
}

// ---- lambency 16

QSeries lambency16(const Ctx& c, const std::string& line, Route route, int tr_a, int tr_b) {
  const Rat h = kHalf;
  const bool two = line == "2", six = line == "6";
  switch (route) {
    case Route::MockTheta:
      if (two) return c.mono(ratio(-1, 16), 2L) * c.mock(MockName::T0).tphase(h);
      if (line == "4") return c.mono(ratio(-1, 4), 2L) * c.mock(MockName::V1);
      if (six) return c.mono(ratio(7, 16), 2L) * c.mock(MockName::T1).tphase(h);
      if (line == "8") return c.mock(MockName::V0);
      return c.mono(ratio(-1, 8), -2L) * c.mock(MockName::U0);
    case Route::IndefiniteTheta: {
      const QSeries pre = c.etaq({{4, 1}, {2, -1}, {8, -1}});
      // tau -> tau + 1/2 on the right-hand side
      if (two) return (pre * c.theta({ratio(5, 8), ratio(1, 8)}, {h, 0}, 8)).scaled(ph(-3, 8)).tphase(h).scaled(ph(1, 32));
      if (six) return (pre * c.theta({ratio(7, 8), ratio(3, 8)}, {h, 0}, 8)).scaled(ph(-5, 8)).tphase(h).scaled(ph(9, 32));
      const QSeries inv = theta1_minus_tau(c.w + 1).inverse();
      if (line == "4") {
        return (c.mono(ratio(-1, 16)) * inv * c.theta({ratio(3, 8), ratio(1, 4)}, {0, h}, 8)).scaled(-imag_unit() * ph(-3, 16));
      }
      if (line == "8") {
        return (c.mono(ratio(-1, 16)) * inv * c.theta({ratio(1, 8), h}, {0, h}, 8)).scaled(-imag_unit() * ph(-1, 16)) -
               c.etaq({{2, 3}, {4, 1}, {1, -2}, {8, -1}});
      }
      return (c.etaq({{4, 1}, {8, -2}}) * c.theta({ratio(1, 4), ratio(1, 4)}, {0, 0}, 4)).scaled(-1L);
    }
    case Route::Modules:
      break;
  }
  if (two || six) {
    const Vec2 a = two ? Vec2{ratio(5, 8), ratio(1, 8)} : Vec2{ratio(7, 8), ratio(3, 8)};
    const QSeries s = c.ap(4) * c.ap(1).pow(2) * c.heis(2) * c.heis(8) * c.trace(8, a, {h, 0});
    return s.scaled(2L * tr_b).tphase(h).scaled(two ? ph(1, 32) : ph(9, 32));
  }
  if (line == "4" || line == "8") {
    // the Weyl character at z = -tau, tau' = 8 tau
    const QSeries weyl = chi_weyl_twisted_at(ratio(-1, 8), 0, 8, c.w + 1);
    const Vec2 a = line == "4" ? Vec2{ratio(3, 8), ratio(1, 4)} : Vec2{ratio(1, 8), h};
    QSeries s = c.mono(ratio(-1, 16), 2L) * c.ap(1).pow(2) * c.heis(8) * weyl * c.trace(8, a, {0, h});
    if (line == "8") s += c.ap(2).pow(3) * c.am(4) * c.heis(1).pow(2) * c.heis(8);
    return s.scaled(long(tr_b));
  }
  return (c.am(4) * c.ap(1).pow(2) * c.heis(8).pow(2) * c.trace(4, {ratio(1, 4), ratio(1, 4)}, {0, 0})).scaled(2L * tr_a);
}

struct LineSet {
  int lambency;
  std::vector<std::string> classes;
  std::vector<std::string> lines;
};

const std::vector<LineSet>& line_sets() {
  static const std::vector<LineSet> s = {
      {8, {"1A", "2A", "2B", "2C", "4A"}, {"1-7-3+5@2", "2", "4"}},
      {12, {"1A", "2A"}, {"1-11@2", "5-7@2", "3-9@2", "2", "4", "6@3"}},
      {16, {"1A", "2A"}, {"2", "4", "6", "8", "1-3+5-7+9-11+13-15@8"}},
  };
  return s;
}

std::optional<std::pair<std::vector<Component>, Rat>> parse_line(const std::string& s) {
  std::vector<Component> parts;
  Rat rescale = 1;
  std::string body = s;
  const auto at = s.find('@');
  if (at != std::string::npos) {
    body = s.substr(0, at);
    try {
      rescale = Rat(s.substr(at + 1));
      rescale.canonicalize();
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    if (rescale <= 0) return std::nullopt;
  }
  std::size_t i = 0;
  while (i < body.size()) {
    int sign = 1;
    if (body[i] == '+' || body[i] == '-') {
      sign = body[i] == '-' ? -1 : 1;
      ++i;
    } else if (!parts.empty()) {
      return std::nullopt;
    }
    std::size_t j = i;
    while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
    if (j == i || j - i > 3) return std::nullopt;
    parts.push_back({sign, std::stoi(body.substr(i, j - i))});
    i = j;
  }
  if (parts.empty()) return std::nullopt;
  return std::make_pair(parts, rescale);
}

}  // namespace

const char* route_name(Route r) {
  switch (r) {
    case Route::MockTheta:
      return "R1";
    case Route::IndefiniteTheta:
      return "R2";
    case Route::Modules:
      return "R3";
  }
  return "?";
}

const std::vector<Route>& all_routes() {
  static const std::vector<Route> r = {Route::MockTheta, Route::IndefiniteTheta, Route::Modules};
  return r;
}

std::string MTKey::line() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 || parts[i].sign < 0) s += parts[i].sign < 0 ? '-' : '+';
    s += std::to_string(parts[i].r);
  }
  if (rescale != 1) s += "@" + rescale.get_str();
  return s;
}

std::string MTKey::label() const { return std::to_string(lambency) + ":" + cls + ":" + line(); }

void MTKey::validate() const {
  const LineSet* set = nullptr;
  for (const auto& ls : line_sets()) {
    if (ls.lambency == lambency) set = &ls;
  }
  if (!set) throw std::invalid_argument("no McKay-Thompson series at lambency " + std::to_string(lambency));
  if (std::find(set->classes.begin(), set->classes.end(), cls) == set->classes.end()) {
    throw std::invalid_argument("unknown class " + cls + " at lambency " + std::to_string(lambency));
  }
  if (std::find(set->lines.begin(), set->lines.end(), line()) == set->lines.end()) {
    throw std::invalid_argument("no specification for " + label());
  }
  std::set<long> seen;
  for (const auto& p : parts) {
    if (p.r <= 0 || p.r >= lambency) throw std::invalid_argument("component out of range in " + label());
    if (!seen.insert((long(p.r) * p.r) % (4L * lambency)).second) {
      throw std::invalid_argument("components of " + label() + " share a residue class");
    }
  }
}

const std::vector<MTKey>& mt_keys() {
  static const std::vector<MTKey> keys = [] {
    std::vector<MTKey> out;
    for (const auto& ls : line_sets()) {
      for (const auto& cls : ls.classes) {
        for (const auto& l : ls.lines) {
          auto parsed = parse_line(l);
          out.push_back({ls.lambency, cls, parsed->first, parsed->second});
        }
      }
    }
    return out;
  }();
  return keys;
}

std::optional<MTKey> parse_mt_key(const std::string& label) {
  const auto c1 = label.find(':');
  if (c1 == std::string::npos) return std::nullopt;
  const auto c2 = label.find(':', c1 + 1);
  if (c2 == std::string::npos) return std::nullopt;
  const std::string lam = label.substr(0, c1);
  if (lam.empty() || lam.size() > 3 || !std::all_of(lam.begin(), lam.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    return std::nullopt;
  }
  MTKey k;
  k.lambency = std::stoi(lam);
  k.cls = label.substr(c1 + 1, c2 - c1 - 1);
  auto parsed = parse_line(label.substr(c2 + 1));
  if (!parsed) return std::nullopt;
  k.parts = parsed->first;
  k.rescale = parsed->second;
  try {
    k.validate();
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return k;
}

namespace {

QSeries build(const MTKey& key, Route route, const Rat& w) {
  const Ctx c{w};
  const std::string line = key.line();
  switch (key.lambency) {
    case 8:
      return lambency8(c, key.cls, line, route);
    case 12:
    case 16: {
      const bool paired = key.cls == "2A";
      if (route == Route::Modules) {
        const int tr_b = paired ? -1 : 1;
        return key.lambency == 12 ? lambency12(c, line, route, 1, tr_b) : lambency16(c, line, route, 1, tr_b);
      }
      QSeries s = key.lambency == 12 ? lambency12(c, line, route, 1, 1) : lambency16(c, line, route, 1, 1);
      // H_{2A,r} = -(-1)^r H_{1A,r}; all parts of a line share the parity of r
      if (paired && key.parts.front().r % 2 == 0) s = -s;
      return s;
    }
  }
  throw std::invalid_argument("no McKay-Thompson series at lambency " + std::to_string(key.lambency));
}

}  // namespace

QSeries mt_series(const MTKey& key, Route route, const Rat& order) {
  key.validate();
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, QSeries> cache;
  const auto slot = std::make_pair(key.label(), static_cast<int>(route));
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(slot);
    if (it != cache.end() && it->second.valid_to() >= order) return it->second.truncate(order);
  }
  QSeries s = ensure_order([&](const Rat& w) { return build(key, route, w); }, order);
  std::lock_guard<std::mutex> lock(mu);
  auto& held = cache[slot];
  if (held.valid_to() < order) held = s;
  return s;
}

QSeries project_residue(const QSeries& s, long m, long r) {
  const Rat target = frac_part(ratio(-r * r, 4 * m));
  return s.filter([&](const Rat& e) { return frac_part(e) == target; });
}

std::vector<std::pair<Component, QSeries>> split_components(const MTKey& key, const QSeries& combined) {
  const QSeries base = combined.rescale(1 / key.rescale);
  std::vector<std::pair<Component, QSeries>> out;
  for (const auto& p : key.parts) {
    QSeries h = project_residue(base, key.lambency, p.r);
    out.emplace_back(p, p.sign < 0 ? -h : h);
  }
  return out;
}

}  // namespace umbral
