#include "umbral/functions.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "umbral/appell.hpp"
#include "umbral/characters.hpp"
#include "umbral/cone.hpp"
#include "umbral/extraction.hpp"
#include "umbral/mckay_thompson.hpp"
#include "umbral/mock.hpp"
#include "umbral/modular.hpp"

namespace umbral {

Rat parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  auto is_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false)) throw ParamError("not a rational number: '" + s + "'");
  Rat r(Int(num[0] == '+' ? num.substr(1) : num), Int(den));
  if (r.get_den() == 0) throw ParamError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

namespace {

// Typed access to key=value parameters; every key must be consumed.
class Args {
 public:
  explicit Args(const Params& p) : p_(p) {}

  Rat rat(const std::string& k, std::optional<Rat> dflt = {}) {
    const auto s = raw(k);
    if (!s) {
      if (!dflt) throw ParamError("missing parameter '" + k + "'");
      return *dflt;
    }
    return parse_rational(*s);
  }
  long integer(const std::string& k, std::optional<long> dflt = {}) {
    const Rat r = rat(k, dflt ? std::optional<Rat>(Rat(*dflt)) : std::nullopt);
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw ParamError("parameter '" + k + "' must be an integer");
    return r.get_num().get_si();
  }
  std::vector<Rat> list(const std::string& k, std::size_t n, std::optional<std::vector<Rat>> dflt = {}) {
    const auto s = raw(k);
    if (!s) {
      if (!dflt) throw ParamError("missing parameter '" + k + "'");
      return *dflt;
    }
    std::vector<Rat> out;
    std::stringstream ss(*s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.size() != n) throw ParamError("parameter '" + k + "' needs " + std::to_string(n) + " comma-separated values");
    return out;
  }
  std::string text(const std::string& k, const std::string& dflt) {
    const auto s = raw(k);
    return s ? *s : dflt;
  }
  bool has(const std::string& k) const { return p_.count(k) > 0; }
  void done() const {
    for (const auto& [k, v] : p_) {
      if (!used_.count(k)) throw ParamError("unknown parameter '" + k + "'");
    }
  }

 private:
  std::optional<std::string> raw(const std::string& k) {
    used_.insert(k);
    auto it = p_.find(k);
    if (it == p_.end()) return std::nullopt;
    return it->second;
  }
  const Params& p_;
  std::set<std::string> used_;
};

using Builder = std::function<Expansion(Args&, const Rat&)>;

Expansion q_only(QSeries s) { return {std::move(s), std::nullopt}; }

int y_reach(const Rat& order) { return 2 * (static_cast<int>(std::sqrt(2 * std::max(0.0, order.get_d()))) + 2); }

Vec2 vec(const std::vector<Rat>& v) { return {v[0], v[1]}; }

NamedFunction entry(std::string name, std::string summary, std::vector<std::string> params, Builder b) {
  NamedFunction f{std::move(name), std::move(summary), std::move(params), {}};
  f.build = [b](const Params& p, const Rat& order) {
    Args a(p);
    Expansion e = b(a, order);
    a.done();
    return e;
  };
  return f;
}

Builder scaled_char(QSeries (*fn)(const Rat&, const Rat&)) {
  return [fn](Args& a, const Rat& o) { return q_only(fn(a.rat("c", 1), o)); };
}

std::vector<NamedFunction> build_registry() {
  std::vector<NamedFunction> r;
  r.push_back(entry("eta", "eta(c tau)", {"c?"}, [](Args& a, const Rat& o) { return q_only(eta(a.rat("c", 1), o)); }));
  r.push_back(entry("theta1", "theta_1(a c tau + b, c tau); y left symbolic without a, b", {"a?", "b?", "c?"},
                    [](Args& a, const Rat& o) {
                      if (!a.has("a") && !a.has("b")) {
                        if (a.rat("c", 1) != 1) throw ParamError("symbolic theta1 is taken at c = 1");
                        const int w = y_reach(o);
                        JacobiSeries j = theta_symbolic(-w, w, o).reflect();
                        return Expansion{QSeries::zero(o), j};
                      }
                      return q_only(theta1_ab(a.rat("a"), a.rat("b"), a.rat("c", 1), o));
                    }));
  r.push_back(entry("theta_m_r", "theta_{m,r}(z, tau); specialized at z = a tau + b when given", {"m", "r", "a?", "b?"},
                    [](Args& a, const Rat& o) {
                      const long m = a.integer("m"), rr = a.integer("r");
                      if (m <= 0) throw ParamError("m must be positive");
                      if (!a.has("a") && !a.has("b")) return Expansion{QSeries::zero(o), theta_index(m, rr, o)};
                      const Rat x = a.rat("a", 0), y = a.rat("b", 0);
                      return q_only(ensure_order([&](const Rat& w) { return theta_index(m, rr, w).specialize(x, y); }, o));
                    }));
  for (MockName m : all_mock_names()) {
    r.push_back(entry("mock:" + mock_name_string(m), "mock theta function " + mock_name_string(m) + "(q)", {},
                      [m](Args&, const Rat& o) { return q_only(mock(m, o)); }));
  }
  r.push_back(entry("g2", "g_2(e^{2 pi i phase} q^shift; q^scale)", {"phase?", "shift?", "scale?"},
                    [](Args& a, const Rat& o) {
                      return q_only(g2(turn(a.rat("phase", 0)), a.rat("shift", 0), a.rat("scale", 1), o));
                    }));
  r.push_back(entry("mu", "mu(a1 tau' + b1, a2 tau' + b2; tau'), tau' = scale tau", {"a1", "b1?", "a2", "b2?", "scale?"},
                    [](Args& a, const Rat& o) {
                      const Point z1{a.rat("a1"), a.rat("b1", 0)}, z2{a.rat("a2"), a.rat("b2", 0)};
                      return q_only(mu(z1, z2, a.rat("scale", 1), o));
                    }));
  r.push_back(entry("mu_m0", "mu_{m,0}(a tau' + b; tau'), tau' = scale tau", {"m", "a", "b?", "scale?"},
                    [](Args& a, const Rat& o) {
                      const long m = a.integer("m");
                      const Point z{a.rat("a"), a.rat("b", 0)};
                      return q_only(mu_m0(m, z, a.rat("scale", 1), o));
                    }));
  r.push_back(entry("mu_m0_k", "(mu_{m,0}(z, tau) + (-1)^k mu_{m,0}(z, tau + 1/2)) / 2", {"m", "k", "a", "b?", "scale?"},
                    [](Args& a, const Rat& o) {
                      const long m = a.integer("m");
                      const int k = static_cast<int>(a.integer("k"));
                      const Point z{a.rat("a"), a.rat("b", 0)};
                      return q_only(mu_m0_halfshift(m, k, z, a.rat("scale", 1), o));
                    }));
  r.push_back(entry("cone_trace",
                    "graded trace of the cone module; A = a11,a12,a22 with c1, c2, or m for ((2m,1),(1,0))",
                    {"A?", "c1?", "c2?", "m?", "N?", "a", "b?"}, [](Args& a, const Rat& o) {
                      QuadData qd = QuadData::standard();
                      if (a.has("m")) {
                        if (a.has("A")) throw ParamError("give either m or A");
                        qd = QuadData::appell_lerch(a.integer("m"));
                      } else if (a.has("A")) {
                        auto to_long = [](const Rat& v) {
                          if (v.get_den() != 1) throw ParamError("matrix and cone vectors must be integral");
                          return v.get_num().get_si();
                        };
                        const auto m = a.list("A", 3), c1 = a.list("c1", 2), c2 = a.list("c2", 2);
                        qd = QuadData{to_long(m[0]), to_long(m[1]), to_long(m[2]), {to_long(c1[0]), to_long(c1[1])},
                                      {to_long(c2[0]), to_long(c2[1])}};
                      }
                      const ConeSpec spec{qd, a.integer("N", 1), vec(a.list("a", 2)), vec(a.list("b", 2, {{0, 0}}))};
                      return q_only(cone_trace(spec, o));
                    }));

  r.push_back(entry("chi:H", "Heisenberg character 1/eta(c tau)", {"c?"}, scaled_char(chi_heisenberg)));
  r.push_back(entry("chi:A+", "Clifford character eta(c tau)", {"c?"},
                    [](Args& a, const Rat& o) { return q_only(chi_clifford(1, a.rat("c", 1), o)); }));
  r.push_back(entry("chi:A-", "Clifford character -eta(c tau)", {"c?"},
                    [](Args& a, const Rat& o) { return q_only(chi_clifford(-1, a.rat("c", 1), o)); }));
  r.push_back(entry("chi:Atw", "twisted Clifford character at z = a tau' + b, tau' = c tau", {"a", "b?", "c?", "d?"},
                    [](Args& a, const Rat& o) {
                      return q_only(chi_clifford_twisted_at(a.rat("a"), a.rat("b", 0), a.rat("c", 1), o,
                                                            static_cast<int>(a.integer("d", 2))));
                    }));
  r.push_back(entry("chi:Weyl", "twisted Weyl character at z = a tau' + b, tau' = c tau, -1 < a < 0",
                    {"a", "b?", "c?", "d?"}, [](Args& a, const Rat& o) {
                      return q_only(chi_weyl_twisted_at(a.rat("a"), a.rat("b", 0), a.rat("c", 1), o,
                                                        static_cast<int>(a.integer("d", 2))));
                    }));
  r.push_back(entry("chi:L1", "sum_n q^{n^2} / eta at c tau", {"c?"}, scaled_char(chi_l1)));
  r.push_back(entry("chi:K", "sum_{n >= 0} q^{n^2} / eta at c tau", {"c?"}, scaled_char(chi_k)));
  r.push_back(entry("chi:Ktw", "sum_{n >= 0} (-1)^n q^{n^2} / eta at c tau", {"c?"}, scaled_char(chi_k_twisted)));
  r.push_back(entry("chi:L1coset", "rank one lattice of norm 2m, coset r/2m, twist h, at c tau", {"m", "r", "h?", "c?"},
                    [](Args& a, const Rat& o) {
                      return q_only(chi_lattice(a.integer("m"), a.integer("r"), a.rat("h", 0), a.rat("c", 1), o));
                    }));

  r.push_back(entry("mt", "McKay-Thompson series by key (8:1A:1-7-3+5@2, ...) and route R1|R2|R3", {"key", "route?"},
                    [](Args& a, const Rat& o) {
                      const std::string label = a.text("key", "");
                      const auto key = parse_mt_key(label);
                      if (!key) throw ParamError("unknown McKay-Thompson key '" + label + "'");
                      const std::string rn = a.text("route", "R1");
                      for (Route rt : all_routes()) {
                        if (rn == route_name(rt)) return q_only(mt_series(*key, rt, o));
                      }
                      throw ParamError("route must be R1, R2 or R3");
                    }));
  r.push_back(entry("h4_3A", "H_{3A,r} at lambency 4 by extraction; route mu|theta|characters", {"r", "route?"},
                    [](Args& a, const Rat& o) {
                      const long rr = a.integer("r");
                      if (rr < 1 || rr > 3) throw ParamError("r must be 1, 2 or 3");
                      const std::string rn = a.text("route", "mu");
                      ExtractionRoute route;
                      if (rn == "mu") {
                        route = ExtractionRoute::AppellLerch;
                      } else if (rn == "theta") {
                        route = ExtractionRoute::IndefiniteTheta;
                      } else if (rn == "characters") {
                        route = ExtractionRoute::Characters;
                      } else {
                        throw ParamError("route must be mu, theta or characters");
                      }
                      return q_only(h4_3a_extract(static_cast<int>(rr), o, route));
                    }));
  return r;
}

}  // namespace

const std::vector<NamedFunction>& named_functions() {
  static const std::vector<NamedFunction> r = build_registry();
  return r;
}

const NamedFunction* find_function(const std::string& name) {
  for (const auto& f : named_functions()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

Expansion expand_function(const std::string& name, const Params& params, const Rat& order) {
  const NamedFunction* f = find_function(name);
  if (!f) throw ParamError("unknown function '" + name + "'");
  return f->build(params, order);
}

}  // namespace umbral
