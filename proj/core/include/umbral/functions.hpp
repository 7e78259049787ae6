#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "umbral/jacobi.hpp"

namespace umbral {

struct ParamError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Params = std::map<std::string, std::string>;

/// A q-series, or a Jacobi series when the elliptic variable stays symbolic.
struct Expansion {
  QSeries q;
  std::optional<JacobiSeries> jacobi;
};

struct NamedFunction {
  std::string name;
  std::string summary;
  std::vector<std::string> params;  // "key" required, "key?" optional
  std::function<Expansion(const Params&, const Rat& order)> build;
};

/// Registry for expansion by name: eta, theta1, theta_m_r, mock:<name>,
/// g2, mu, mu_m0, mu_m0_k, cone_trace, chi:*, mt, h4_3A.
const std::vector<NamedFunction>& named_functions();
const NamedFunction* find_function(const std::string& name);

/// Throws ParamError for unknown names, unknown or missing parameters and
/// malformed values; builder errors propagate.
Expansion expand_function(const std::string& name, const Params& params, const Rat& order);

/// "3", "-1/4"; throws ParamError.
Rat parse_rational(const std::string& s);

}  // namespace umbral
