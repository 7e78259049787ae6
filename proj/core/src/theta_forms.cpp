#include "umbral/theta_forms.hpp"

#include "umbral/indefinite.hpp"
#include "umbral/modular.hpp"

namespace umbral {

namespace {

const Rat kHalf = ratio(1, 2);

QSeries theta_ab_std(const Vec2& a, const Vec2& b, long N, const Rat& w) {
  return itheta_ab(QuadData::standard(), {a, b}, N, w);
}

// Theta^+(z1, z2; N tau) with z_i = t_i tau + s_i, i.e. z_i = (t_i / N) tau' + s_i
QSeries theta_z_std(const Vec2& t, const Vec2& s, long N, const Rat& w) {
  return itheta_z(QuadData::standard(), {{t[0] / N, t[1] / N}, s}, N, w);
}

QSeries mono(const Rat& e, const CycNum& c, const Rat& w) { return QSeries::monomial(e, c, w); }

QSeries etaq(std::vector<std::pair<Rat, long>> f, const Rat& w) { return eta_quotient(f, w); }

// T0 and T1 are the only ingredients the S0, S1 rows need beyond X and Y.
QSeries s_from_t(bool one, const QSeries& t, const Rat& w) {
  const QSeries x = eta_x(w), y = eta_y(w);
  const QSeries pair = one ? (y - x).shift(ratio(-7, 16)) : (x + y).shift(ratio(1, 16));
  return pair.scaled(kHalf) - t.scaled(2L);
}

QSeries ab_form_at(MockName m, const Rat& w) {
  switch (m) {
    case MockName::A:
      return mono(ratio(1, 8), turn(ratio(-3, 8)) * CycNum(kHalf), w) * etaq({{4, 1}, {2, -2}}, w) *
             theta_ab_std({ratio(3, 4), ratio(1, 4)}, {0, kHalf}, 4, w);
    case MockName::B:
      return mono(ratio(-1, 2), turn(ratio(-3, 8)) * CycNum(kHalf), w) * etaq({{2, 1}, {1, -1}, {4, -1}}, w) *
             theta_ab_std({ratio(3, 4), kHalf}, {0, kHalf}, 4, w);
    case MockName::f:
      return mono(ratio(1, 24), turn(ratio(-5, 12)) * CycNum(-2L), w) * etaq({{1, -1}}, w) *
                 theta_ab_std({ratio(2, 3), ratio(1, 6)}, {kHalf, 0}, 3, w) +
             etaq({{3, 4}, {1, -1}, {6, -2}}, w).shift(ratio(1, 24));
    case MockName::omega:
      return mono(ratio(-2, 3), turn(ratio(-1, 4)), w) * etaq({{2, -1}}, w) *
                 theta_ab_std({kHalf, ratio(1, 3)}, {0, kHalf}, 6, w) +
             etaq({{6, 4}, {2, -1}, {3, -2}}, w).shift(ratio(-2, 3));
    case MockName::sigma:
      return mono(ratio(1, 12), turn(ratio(-1, 4)) * CycNum(kHalf), w) * etaq({{2, 1}, {3, 1}, {1, -1}, {6, -2}}, w) *
             theta_ab_std({kHalf, ratio(1, 6)}, {0, kHalf}, 6, w);
    case MockName::psi6:
      return mono(ratio(3, 8), turn(ratio(-7, 12)) * CycNum(kHalf), w) * etaq({{1, 1}, {6, 1}, {2, -1}, {3, -2}}, w) *
             theta_ab_std({ratio(1, 3), kHalf}, {kHalf, kHalf}, 3, w);
    case MockName::T0:
      return mono(ratio(1, 16), turn(ratio(-3, 8)) * CycNum(kHalf), w) * etaq({{4, 1}, {2, -1}, {8, -1}}, w) *
             theta_ab_std({ratio(5, 8), ratio(1, 8)}, {kHalf, 0}, 8, w);
    case MockName::T1:
      return mono(ratio(-7, 16), turn(ratio(-5, 8)) * CycNum(ratio(-1, 2)), w) * etaq({{4, 1}, {2, -1}, {8, -1}}, w) *
             theta_ab_std({ratio(7, 8), ratio(3, 8)}, {kHalf, 0}, 8, w);
    case MockName::U0:
      return mono(ratio(1, 8), kHalf, w) * etaq({{4, 1}, {8, -2}}, w) *
             theta_ab_std({ratio(1, 4), ratio(1, 4)}, {0, 0}, 4, w);
    case MockName::V0:
      return mono(ratio(-1, 16), -imag_unit() * turn(ratio(-1, 16)), w) * theta1_minus_tau(w + 1).inverse() *
                 theta_ab_std({ratio(1, 8), kHalf}, {0, kHalf}, 8, w) -
             etaq({{2, 3}, {4, 1}, {1, -2}, {8, -1}}, w);
    case MockName::V1:
      return mono(ratio(3, 16), -imag_unit() * turn(ratio(-3, 16)) * CycNum(kHalf), w) *
             theta1_minus_tau(w + 1).inverse() * theta_ab_std({ratio(3, 8), ratio(1, 4)}, {0, kHalf}, 8, w);
    case MockName::S0:
      return s_from_t(false, ab_form_at(MockName::T0, w), w);
    case MockName::S1:
      return s_from_t(true, ab_form_at(MockName::T1, w), w);
  }
  throw std::invalid_argument("unknown mock theta function");
}

QSeries omega_z(const Rat& w, bool misprint) {
  return mono(ratio(13, 12), 1L, w) * etaq({{misprint ? 1 : 2, -1}}, w) * theta_z_std({3, 2}, {0, kHalf}, 6, w) +
         etaq({{6, 4}, {2, -1}, {3, -2}}, w).shift(ratio(-2, 3));
}

QSeries z_form_at(MockName m, const Rat& w) {
  switch (m) {
    case MockName::A:
      return mono(2, kHalf, w) * etaq({{4, 1}, {2, -2}}, w) * theta_z_std({3, 1}, {0, kHalf}, 4, w);
    case MockName::B:
      return mono(ratio(17, 8), kHalf, w) * etaq({{2, 1}, {1, -1}, {4, -1}}, w) * theta_z_std({3, 2}, {0, kHalf}, 4, w);
    case MockName::f:
      return mono(ratio(25, 24), -2L, w) * etaq({{1, -1}}, w) * theta_z_std({2, kHalf}, {kHalf, 0}, 3, w) +
             etaq({{3, 4}, {1, -1}, {6, -2}}, w).shift(ratio(1, 24));
    case MockName::omega:
      return omega_z(w, false);
    case MockName::sigma:
      return mono(ratio(4, 3), kHalf, w) * etaq({{2, 1}, {3, 1}, {1, -1}, {6, -2}}, w) *
             theta_z_std({3, 1}, {0, kHalf}, 6, w);
    case MockName::psi6:
      return mono(ratio(25, 24), kHalf, w) * etaq({{1, 1}, {6, 1}, {2, -1}, {3, -2}}, w) *
             theta_z_std({1, ratio(3, 2)}, {kHalf, kHalf}, 3, w);
    case MockName::T0:
      return mono(ratio(9, 4), kHalf, w) * etaq({{4, 1}, {2, -1}, {8, -1}}, w) * theta_z_std({5, 1}, {kHalf, 0}, 8, w);
    case MockName::T1:
      return mono(ratio(21, 4), ratio(-1, 2), w) * etaq({{4, 1}, {2, -1}, {8, -1}}, w) * theta_z_std({7, 3}, {kHalf, 0}, 8, w);
    case MockName::U0:
      return mono(kHalf, kHalf, w) * etaq({{4, 1}, {8, -2}}, w) * theta_z_std({1, 1}, {0, 0}, 4, w);
    case MockName::V0:
      return mono(kHalf, -imag_unit(), w) * theta1_minus_tau(w + 1).inverse() * theta_z_std({1, 4}, {0, kHalf}, 8, w) -
             etaq({{2, 3}, {4, 1}, {1, -2}, {8, -1}}, w);
    case MockName::V1:
      return mono(ratio(3, 2), -imag_unit() * CycNum(kHalf), w) * theta1_minus_tau(w + 1).inverse() *
             theta_z_std({3, 2}, {0, kHalf}, 8, w);
    case MockName::S0:
      return s_from_t(false, z_form_at(MockName::T0, w), w);
    case MockName::S1:
      return s_from_t(true, z_form_at(MockName::T1, w), w);
  }
  throw std::invalid_argument("unknown mock theta function");
}

}  // namespace

QSeries eta_x(const Rat& order) { return eta_quotient({{kHalf, 3}, {1, -1}, {2, -1}}, order); }
QSeries eta_y(const Rat& order) { return eta_quotient({{1, 8}, {kHalf, -3}, {2, -4}}, order); }

QSeries theta1_minus_tau(const Rat& order) { return theta1_ab(ratio(-1, 8), 0, 8, order); }

QSeries mock_ab_form(MockName m, const Rat& order) {
  return ensure_order([&](const Rat& w) { return ab_form_at(m, w); }, order);
}

QSeries mock_z_form(MockName m, const Rat& order) {
  return ensure_order([&](const Rat& w) { return z_form_at(m, w); }, order);
}

QSeries omega_z_form_misprint(const Rat& order) {
  return ensure_order([&](const Rat& w) { return omega_z(w, true); }, order);
}

}  // namespace umbral
