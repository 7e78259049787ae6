#pragma once

#include "umbral/jacobi.hpp"
#include "umbral/qseries.hpp"

namespace umbral {

/// Heisenberg character 1/eta(c tau).
QSeries chi_heisenberg(const Rat& c, const Rat& order);
/// Canonically twisted Clifford characters +eta(c tau) (sign > 0) and -eta(c tau).
QSeries chi_clifford(int sign, const Rat& c, const Rat& order);

/// Twisted Clifford module of rank d at (cz z + t, ct tau), y kept symbolic:
/// Y^{d/4} q'^{d/24} prod (1 + Y^{-1} q'^{n-1})^{d/2} (1 + Y q'^n)^{d/2},
/// Y = e^{2 pi i t} y^{cz}. Columns in [lo2/2, hi2/2] are exact.
JacobiSeries chi_clifford_twisted(int cz, const Rat& t, const Rat& ct, int lo2, int hi2, const Rat& order,
                                  int d = 2);
/// Twisted Weyl module of rank d at (c z, c tau), expanded in the strip
/// 0 < -Im z < Im tau and tagged with it:
/// Y^{-d/4} q'^{-d/24} prod (1 - Y^{-1} q'^{n-1})^{-d/2} (1 - Y q'^n)^{-d/2}.
JacobiSeries chi_weyl_twisted(int c, int lo2, int hi2, const Rat& order, int d = 2);

/// The same characters at z = a tau' + b, tau' = ct tau. The Weyl
/// character needs -1 < a < 0.
QSeries chi_clifford_twisted_at(const Rat& a, const Rat& b, const Rat& ct, const Rat& order, int d = 2);
QSeries chi_weyl_twisted_at(const Rat& a, const Rat& b, const Rat& ct, const Rat& order, int d = 2);

/// Rank one lattice of norm 2m, coset r/2m (0 <= r < 2m) twisted by h:
/// (1/eta) sum_n e^{2 pi i h (2mn + r)} q^{(2mn + r)^2 / 4m}, at c tau.
QSeries chi_lattice(long m, long r, const Rat& h, const Rat& c, const Rat& order);

/// sum_n q^{n^2} / eta, and the half-lattice sums over n >= 0 without and
/// with the sign (-1)^n, all at c tau.
QSeries chi_l1(const Rat& c, const Rat& order);
QSeries chi_k(const Rat& c, const Rat& order);
QSeries chi_k_twisted(const Rat& c, const Rat& order);

}  // namespace umbral
