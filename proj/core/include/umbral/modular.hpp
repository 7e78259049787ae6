#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "umbral/jacobi.hpp"
#include "umbral/qseries.hpp"

namespace umbral {

/// (x; q^c)_len with x = root * q^shift; len empty means the infinite product.
struct PochSpec {
  CycNum root{1L};
  Rat shift{0};
  Rat scale{1};
  std::optional<long> length;
};

QSeries pochhammer(const PochSpec& spec, const Rat& order);
/// 1 / (x; q^c)_len; every factor must be a unit.
QSeries pochhammer_inverse(const PochSpec& spec, const Rat& order);

/// eta(c tau).
QSeries eta(const Rat& c, const Rat& order);
/// prod eta(c_i tau)^{p_i}; exact to `order` for any signs of p_i.
QSeries eta_quotient(const std::vector<std::pair<Rat, long>>& factors, const Rat& order);

/// theta(z; tau) = sum_{nu in Z+1/2} e^{pi i nu^2 tau + 2 pi i nu (z + 1/2)}
/// with y symbolic, on the y window [lo2/2, hi2/2].
JacobiSeries theta_symbolic(int lo2, int hi2, const Rat& q_valid_to);
/// theta(a tau' + b; tau') with tau' = c tau.
QSeries theta_ab(const Rat& a, const Rat& b, const Rat& c, const Rat& order);
/// theta_1(z, tau) = theta(-z, tau).
QSeries theta1_ab(const Rat& a, const Rat& b, const Rat& c, const Rat& order);

/// Product forms -i q^{1/8} y^{1/2} prod (1 - y^{-1} q^{n-1})(1 - y q^n)(1 - q^n)
/// and q^{1/8} y^{1/2} prod (1 + y^{-1} q^{n-1})(1 + y q^n)(1 - q^n).
JacobiSeries theta1_product(int lo2, int hi2, const Rat& q_valid_to);
JacobiSeries theta2_product(int lo2, int hi2, const Rat& q_valid_to);

/// theta_{m,r}(z, tau) = sum_k y^{2mk+r} q^{(2mk+r)^2/4m}; the default
/// window holds every term below the horizon.
JacobiSeries theta_index(long m, long r, const Rat& order, std::optional<std::pair<int, int>> window = {});

}  // namespace umbral
