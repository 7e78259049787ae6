#pragma once

#include <optional>
#include <string>
#include <vector>

#include "umbral/qseries.hpp"

namespace umbral {

enum class MockName { A, B, f, omega, sigma, psi6, S0, S1, T0, T1, U0, V0, V1 };

const std::vector<MockName>& all_mock_names();
std::string mock_name_string(MockName m);
std::optional<MockName> parse_mock_name(const std::string& s);

/// One factor (root q^shift; q^scale)_{mult n + offset} raised to `power`
/// (negative powers divide) inside a q-hypergeometric summand.
struct SummandFactor {
  CycNum root{1L};
  Rat shift{0};
  Rat scale{1};
  long mult = 1;
  long offset = 0;
  int power = 1;
};

/// sum_n (+-1)^n q^{a2 n^2 + a1 n + a0} prod factors.
struct HypergeometricSum {
  Rat a2, a1, a0;
  bool alternating = false;
  std::vector<SummandFactor> factors;
};

/// Sums terms until a summand starts at or beyond `order`. Throws
/// std::logic_error if the summand leading exponents stop increasing.
QSeries hypergeometric_sum(const HypergeometricSum& s, const Rat& order);

/// The defining sum of a mock theta function.
HypergeometricSum mock_definition(MockName m);
QSeries mock(MockName m, const Rat& order);

/// g_2(zeta; Q) with zeta = phase q^shift and Q = q^scale.
QSeries g2(const CycNum& phase, const Rat& shift, const Rat& scale, const Rat& order);

}  // namespace umbral
