#include "umbral/mock.hpp"

#include <algorithm>

namespace umbral {

namespace {

struct NamedMock {
  MockName id;
  const char* name;
};

constexpr NamedMock kNames[] = {
    {MockName::A, "A"},   {MockName::B, "B"},   {MockName::f, "f"},       {MockName::omega, "omega"},
    {MockName::sigma, "sigma"}, {MockName::psi6, "psi6"}, {MockName::S0, "S0"}, {MockName::S1, "S1"},
    {MockName::T0, "T0"}, {MockName::T1, "T1"}, {MockName::U0, "U0"}, {MockName::V0, "V0"},
    {MockName::V1, "V1"},
};

SummandFactor poch(long root, long shift, long scale, long mult, long offset, int power) {
  return SummandFactor{CycNum(root), Rat(shift), Rat(scale), mult, offset, power};
}

void apply_factor(QSeries& r, const SummandFactor& f, long k) {
  const Rat e = f.shift + f.scale * Rat(k);
  for (int t = 0; t < std::abs(f.power); ++t) r = f.power > 0 ? r.mul_one_minus(f.root, e) : r.div_one_minus(f.root, e);
}

}  // namespace

const std::vector<MockName>& all_mock_names() {
  static const std::vector<MockName> v = [] {
    std::vector<MockName> out;
    for (const auto& n : kNames) out.push_back(n.id);
    return out;
  }();
  return v;
}

std::string mock_name_string(MockName m) {
  for (const auto& n : kNames) {
    if (n.id == m) return n.name;
  }
  return "?";
}

std::optional<MockName> parse_mock_name(const std::string& s) {
  for (const auto& n : kNames) {
    if (s == n.name) return n.id;
  }
  return std::nullopt;
}

QSeries hypergeometric_sum(const HypergeometricSum& s, const Rat& order) {
  QSeries total = QSeries::zero(order);
  // running product of the factors, extended one Pochhammer factor at a time
  QSeries ratio = QSeries::constant(1L, order);
  std::vector<long> done(s.factors.size(), 0);
  std::optional<Rat> prev;
  for (long n = 0;; ++n) {
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
      const auto& f = s.factors[i];
      const long want = f.mult * n + f.offset;
      for (; done[i] < want; ++done[i]) apply_factor(ratio, f, done[i]);
    }
    const Rat e = s.a2 * Rat(n * n) + s.a1 * Rat(n) + s.a0;
    const Rat lead = e + ratio.min_exp();
    if (prev && lead <= *prev) throw std::logic_error("summand leading exponents are not increasing");
    prev = lead;
    if (lead >= order) break;
    QSeries term = ratio.shift(e);
    if (s.alternating && n % 2) term = -term;
    total += term;
    ratio = ratio.truncate(order - e);
  }
  return total.truncate(order);
}

HypergeometricSum mock_definition(MockName m) {
  HypergeometricSum s;
  auto quad = [&](long a2, long a1, long a0, long den = 1) {
    s.a2 = ratio(a2, den);
    s.a1 = ratio(a1, den);
    s.a0 = ratio(a0, den);
  };
  switch (m) {
    case MockName::A:  // q^{n+1} (-q^2;q^2)_n / (q;q^2)_{n+1}
      quad(0, 1, 1);
      s.factors = {poch(-1, 2, 2, 1, 0, 1), poch(1, 1, 2, 1, 1, -1)};
      break;
    case MockName::B:  // q^n (-q;q^2)_n / (q;q^2)_{n+1}
      quad(0, 1, 0);
      s.factors = {poch(-1, 1, 2, 1, 0, 1), poch(1, 1, 2, 1, 1, -1)};
      break;
    case MockName::f:  // q^{n^2} / (-q;q)_n^2
      quad(1, 0, 0);
      s.factors = {poch(-1, 1, 1, 1, 0, -2)};
      break;
    case MockName::omega:  // q^{2n(n+1)} / (q;q^2)_{n+1}^2
      quad(2, 2, 0);
      s.factors = {poch(1, 1, 2, 1, 1, -2)};
      break;
    case MockName::sigma:  // q^{(n+1)(n+2)/2} (-q;q)_n / (q;q^2)_{n+1}
      quad(1, 3, 2, 2);
      s.factors = {poch(-1, 1, 1, 1, 0, 1), poch(1, 1, 2, 1, 1, -1)};
      break;
    case MockName::psi6:  // (-1)^n q^{(n+1)^2} (q;q^2)_n / (-q;q)_{2n+1}
      quad(1, 2, 1);
      s.alternating = true;
      s.factors = {poch(1, 1, 2, 1, 0, 1), poch(-1, 1, 1, 2, 1, -1)};
      break;
    case MockName::S0:  // q^{n^2} (-q;q^2)_n / (-q^2;q^2)_n
      quad(1, 0, 0);
      s.factors = {poch(-1, 1, 2, 1, 0, 1), poch(-1, 2, 2, 1, 0, -1)};
      break;
    case MockName::S1:  // q^{n(n+2)} (-q;q^2)_n / (-q^2;q^2)_n
      quad(1, 2, 0);
      s.factors = {poch(-1, 1, 2, 1, 0, 1), poch(-1, 2, 2, 1, 0, -1)};
      break;
    case MockName::T0:  // q^{(n+1)(n+2)} (-q^2;q^2)_n / (-q;q^2)_{n+1}
      quad(1, 3, 2);
      s.factors = {poch(-1, 2, 2, 1, 0, 1), poch(-1, 1, 2, 1, 1, -1)};
      break;
    case MockName::T1:  // q^{n(n+1)} (-q^2;q^2)_n / (-q;q^2)_{n+1}
      quad(1, 1, 0);
      s.factors = {poch(-1, 2, 2, 1, 0, 1), poch(-1, 1, 2, 1, 1, -1)};
      break;
    case MockName::U0:  // q^{n^2} (-q;q^2)_n / (-q^4;q^4)_n
      quad(1, 0, 0);
      s.factors = {poch(-1, 1, 2, 1, 0, 1), poch(-1, 4, 4, 1, 0, -1)};
      break;
    case MockName::V0:  // inner sum q^{n^2} (-q;q^2)_n / (q;q^2)_n
      quad(1, 0, 0);
      s.factors = {poch(-1, 1, 2, 1, 0, 1), poch(1, 1, 2, 1, 0, -1)};
      break;
    case MockName::V1:  // q^{(n+1)^2} (-q;q^2)_n / (q;q^2)_{n+1}
      quad(1, 2, 1);
      s.factors = {poch(-1, 1, 2, 1, 0, 1), poch(1, 1, 2, 1, 1, -1)};
      break;
  }
  return s;
}

QSeries mock(MockName m, const Rat& order) {
  QSeries s = hypergeometric_sum(mock_definition(m), order);
  if (s.valid_to() < order) throw HorizonError("mock theta sum fell short of the requested order");
  if (m == MockName::V0) return s.scaled(2L) - CycNum(1L);
  return s;
}

QSeries g2(const CycNum& phase, const Rat& shift, const Rat& scale, const Rat& order) {
  if (scale <= 0) throw std::invalid_argument("g2 base exponent must be positive");
  if (shift == 0 && phase.is_one()) throw NotAUnit("g2 at zeta = 1 has a pole");
  if (shift == scale && phase.is_one()) throw NotAUnit("g2 at zeta = q has a pole");
  return ensure_order(
      [&](const Rat& work) {
        HypergeometricSum s;
        s.a2 = scale / 2;
        s.a1 = scale / 2;
        s.a0 = 0;
        s.factors = {SummandFactor{CycNum(-1L), scale, scale, 1, 0, 1},
                     SummandFactor{phase, shift, scale, 1, 1, -1},
                     SummandFactor{phase.inverse(), scale - shift, scale, 1, 1, -1}};
        return hypergeometric_sum(s, work);
      },
      order);
}

}  // namespace umbral
