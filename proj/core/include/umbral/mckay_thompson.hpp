#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "umbral/qseries.hpp"

namespace umbral {

/// Three independent constructions of a McKay-Thompson series.
enum class Route {
  MockTheta,        // mock theta functions and eta quotients
  IndefiniteTheta,  // indefinite thetas with characteristics
  Modules,          // characters of Heisenberg, Clifford, Weyl, lattice and cone modules
};
const char* route_name(Route r);
const std::vector<Route>& all_routes();

struct Component {
  int sign = 1;
  int r = 1;
};

/// A signed sum of components H_{g,r}(c tau) for one lambency and class.
struct MTKey {
  int lambency = 8;
  std::string cls;
  std::vector<Component> parts;
  Rat rescale{1};

  /// "8:1A:1-7-3+5@2", "16:2A:8", ...
  std::string label() const;
  /// The part after the class: "1-7-3+5@2".
  std::string line() const;
  /// Throws std::invalid_argument for an unknown lambency, class or line,
  /// or when two parts share a residue class r^2 mod 4 lambency.
  void validate() const;
};

/// Every key with a specification: lambency 8 over the classes of the
/// dihedral group of order 8, lambencies 12 and 16 over Z/2.
const std::vector<MTKey>& mt_keys();
std::optional<MTKey> parse_mt_key(const std::string& label);

/// The combined series of `key` along one route. Class 2A at lambencies
/// 12 and 16 (and 2A, 2B, 2C, 4A even components at 8) come from class
/// 1A by the pairing relation on the mock theta and indefinite theta
/// routes; the module route uses the group traces directly. Results are
/// cached.
QSeries mt_series(const MTKey& key, Route route, const Rat& order);

/// Keeps the exponents congruent to -r^2 / 4m mod 1.
QSeries project_residue(const QSeries& s, long m, long r);

/// H_r(tau) for each part of a combined series, by undoing the rescale
/// and projecting on the part's residue class.
std::vector<std::pair<Component, QSeries>> split_components(const MTKey& key, const QSeries& combined);

}  // namespace umbral
