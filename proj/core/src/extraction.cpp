#include "umbral/extraction.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "umbral/appell.hpp"
#include "umbral/characters.hpp"
#include "umbral/indefinite.hpp"
#include "umbral/modular.hpp"

namespace umbral {

namespace {

int ceil_int(const Rat& v) { return static_cast<int>(ceil_rat(v).get_si()); }

// Base window for a series that will be substituted with z -> c z.
std::pair<int, int> base_window(int lo2, int hi2, int c) { return {lo2 / c - 2, hi2 / c + 2}; }

// 1/theta_1(z, tau) = i q^{-1/8} y^{-1/2} / prod (1 - y^{-1} q^{n-1})(1 - y q^n)(1 - q^n)
// in the lower strip, the last product taken from 1/eta. As for the Weyl
// character, a column L below q^v only needs columns in [L - v, v].
JacobiSeries theta1_inverse(int lo2, int hi2, const Rat& v) {
  const int blo = std::min(lo2, 0) - 2 * ceil_int(v) - 4, bhi = std::max(hi2, 2 * ceil_int(v)) + 4;
  JacobiSeries j = JacobiSeries::monomial(-1, ratio(-1, 12), imag_unit(), blo, bhi, v);
  j.tag(Strip::Lower);
  for (long n = 1; Rat(n - 1) < v; ++n) {
    j = j.div_binomial(1L, -2, Rat(n - 1));
    if (Rat(n) < v) j = j.div_binomial(1L, 2, Rat(n));
  }
  return j.times(eta_quotient({{1, -1}}, v + 1)).truncate(v).restrict(lo2, hi2);
}

// (y, q) exponents of n = (n1, n2) for the form ((8,1),(1,0)) at (z, 0)
struct LatticePoint {
  long y;
  Rat q;
};
LatticePoint lattice_point(long n1, long n2) { return {8 * n1 + n2, Rat(4 * n1 * n1 + n1 * n2)}; }

// Both lattice sums only see points with Q(n) >= 4 n1^2.
template <class Weight>
JacobiSeries lattice_sum(int lo2, int hi2, const Rat& v, Weight weight) {
  const long reach = static_cast<long>(std::sqrt(std::max(0.0, v.get_d())) / 2) + 2;
  const long lmin = (lo2 - 1) / 2, lmax = (hi2 + 1) / 2;
  JacobiBuilder jb;
  for (long n1 = -reach; n1 <= reach; ++n1) {
    for (long l = lmin; l <= lmax; ++l) {
      const long n2 = l - 8 * n1;
      const long w = weight(n1, n2);
      if (w == 0) continue;
      const LatticePoint p = lattice_point(n1, n2);
      if (p.q < 0) throw std::logic_error("negative norm inside the theta support");
      if (p.q < v) jb.add(static_cast<int>(2 * p.y), p.q, 0, w);
    }
  }
  JacobiSeries j = jb.finish(lo2, hi2, v);
  return j.tag(Strip::Lower);
}

}  // namespace

JacobiSeries psi_3a_theta(int lo2, int hi2, const Rat& order) {
  const Rat v = order + 1;
  const auto [lo6, hi6] = base_window(lo2, hi2, 6);
  const auto [lo3, hi3] = base_window(lo2, hi2, 3);
  JacobiSeries num = theta1_product(lo6, hi6, v / 3).substitute(6, 0, 3);
  JacobiSeries den = theta1_inverse(lo2, hi2, v) * theta1_inverse(lo3, hi3, v / 3).substitute(3, 0, 3);
  return (den * num).times(eta_quotient({{1, 3}}, v)).scaled(CycNum(2L) * imag_unit()).truncate(order);
}

JacobiSeries psi_3a_characters(int lo2, int hi2, const Rat& order) {
  const Rat v = order + 1;
  JacobiSeries weyl = chi_weyl_twisted(1, lo2, hi2, v) * chi_weyl_twisted(3, lo2, hi2, v);
  JacobiSeries cliff = chi_clifford_twisted(6, ratio(1, 2), 3, lo2, hi2, v);
  const QSeries pm = chi_clifford(1, 1, v) * chi_clifford(-1, 1, v);
  // the product of characters is -psi
  return (weyl * cliff).times(pm).scaled(CycNum(-2L) * imag_unit()).truncate(order);
}

JacobiSeries theta_plus_lattice(int lo2, int hi2, const Rat& order) {
  const QuadData qd = QuadData::appell_lerch(4);
  // any a in (-1, 0) gives the same signs on Z^2 + (a, 0)
  return lattice_sum(lo2, hi2, order, [&](long n1, long n2) {
    return cone_sign(qd, {Rat(n1) - ratio(1, 2), Rat(n2)}, {true});
  });
}

JacobiSeries theta_plus_cone(int lo2, int hi2, const Rat& order) {
  // 2 on {n1 >= 1, n2 >= 0}, -2 on {n1 <= 0, n2 < 0}, minus the row n2 = 0
  return lattice_sum(lo2, hi2, order, [](long n1, long n2) -> long {
    long w = 0;
    if (n1 >= 1 && n2 >= 0) w = 2;
    if (n1 <= 0 && n2 < 0) w = -2;
    if (n2 == 0) w -= 1;
    return w;
  });
}

JacobiSeries h4_3a_generating(ExtractionRoute route, int lo2, int hi2, const Rat& order) {
  switch (route) {
    case ExtractionRoute::AppellLerch:
      return psi_3a_theta(lo2, hi2, order) + mu_m0_jacobi(4, Strip::Lower, lo2, hi2, order).scaled(2L);
    case ExtractionRoute::IndefiniteTheta:
      return psi_3a_theta(lo2, hi2, order) - theta_plus_lattice(lo2, hi2, order).scaled(2L);
    case ExtractionRoute::Characters:
      return psi_3a_characters(lo2, hi2, order) - theta_plus_cone(lo2, hi2, order).scaled(2L);
  }
  throw std::invalid_argument("unknown extraction route");
}

namespace {

constexpr int kFirstWindow = 16;
constexpr int kLastWindow = 1024;

std::array<QSeries, 6> read_columns(const JacobiSeries& j, const Rat& order) {
  std::array<QSeries, 6> out;
  for (int r = 1; r <= 3; ++r) {
    const Rat s = ratio(-r * r, 16);
    out[r - 1] = j.column(2 * r).shift(s).truncate(order);
    out[r + 2] = j.column(-2 * r).shift(s).truncate(order);
  }
  return out;
}

bool even_integers(const QSeries& s) {
  bool ok = true;
  s.for_each_term([&](const Rat&, const CycNum& c) {
    const auto z = c.to_integer();
    if (!z || mpz_even_p(z->get_mpz_t()) == 0) ok = false;
  });
  return ok;
}

H43aComponents extract(ExtractionRoute route, const Rat& order) {
  const Rat v = order + 1;
  auto at = [&](int w) { return read_columns(h4_3a_generating(route, -2 * w, 2 * w, v), order); };
  int w = kFirstWindow;
  std::array<QSeries, 6> prev = at(w);
  for (;;) {
    if (2 * w > kLastWindow) throw ExtractionError("y window did not stabilize");
    std::array<QSeries, 6> next = at(2 * w);
    if (next == prev) break;
    prev = std::move(next);
    w *= 2;
  }
  H43aComponents out;
  out.window = w;
  for (int r = 1; r <= 3; ++r) {
    const QSeries& pos = prev[r - 1];
    if (pos.valid_to() < order) throw ExtractionError("extracted column falls short of the requested order");
    if (!qs_equal(pos, -prev[r + 2]).equal) {
      throw ExtractionError("columns y^" + std::to_string(r) + " and y^-" + std::to_string(r) + " are not opposite");
    }
    if (!even_integers(pos)) throw ExtractionError("non-even coefficient in the column y^" + std::to_string(r));
    out.h[r - 1] = pos;
  }
  return out;
}

}  // namespace

H43aComponents h4_3a_components(ExtractionRoute route, const Rat& order) {
  static std::mutex mu;
  static std::map<int, std::pair<Rat, H43aComponents>> cache;
  const int key = static_cast<int>(route);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end() && it->second.first >= order) {
      H43aComponents c = it->second.second;
      for (auto& h : c.h) h = h.truncate(order);
      return c;
    }
  }
  H43aComponents c = extract(route, order);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (slot.first < order) slot = {order, c};
  return c;
}

QSeries h4_3a_extract(int r, const Rat& order, ExtractionRoute route) {
  if (r < 1 || r > 3) throw std::invalid_argument("H_{3A,r} is extracted for r = 1, 2, 3");
  return h4_3a_components(route, order).h[r - 1];
}

}  // namespace umbral
