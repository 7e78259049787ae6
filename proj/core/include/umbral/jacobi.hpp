#pragma once

#include <map>
#include <vector>

#include "umbral/qseries.hpp"

namespace umbral {

/// Region of z in which geometric expansions were taken, written z = a tau + b:
/// Lower means -1 < a < 0, Upper means 0 < a < 1.
enum class Strip { None, Lower, Upper };

struct StripConflict : std::logic_error {
  using std::logic_error::logic_error;
};

/// An input point lies outside the region an expansion needs.
struct StripViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Truncated series in y = e^{2 pi i z} and q. y-exponents are half
/// integers, stored doubled. Columns inside [lo, hi] are complete below
/// the common q horizon, provided the construction did not push
/// contributions across the window edge; callers that rely on a column
/// confirm it by widening the window.
class JacobiSeries {
 public:
  JacobiSeries(int lo2, int hi2, const Rat& q_valid_to, Strip strip = Strip::None);

  static JacobiSeries monomial(int l2, const Rat& e, const CycNum& c, int lo2, int hi2, const Rat& q_valid_to);
  static JacobiSeries from_qseries(const QSeries& s, int lo2, int hi2);

  int lo2() const { return lo2_; }
  int hi2() const { return hi2_; }
  const Rat& q_valid_to() const { return valid_; }
  Strip strip() const { return strip_; }
  JacobiSeries& tag(Strip s);

  /// Coefficient series of y^{l2/2}.
  QSeries column(int l2) const;
  const std::map<int, QSeries>& columns() const { return cols_; }
  void add_to_column(int l2, const QSeries& s);

  JacobiSeries operator-() const;
  friend JacobiSeries operator+(const JacobiSeries& a, const JacobiSeries& b);
  friend JacobiSeries operator-(const JacobiSeries& a, const JacobiSeries& b);
  friend JacobiSeries operator*(const JacobiSeries& a, const JacobiSeries& b);
  friend bool operator==(const JacobiSeries& a, const JacobiSeries& b);

  JacobiSeries scaled(const CycNum& c) const;
  JacobiSeries times(const QSeries& f) const;
  /// Multiply by y^{l2/2} q^e.
  JacobiSeries shifted(int l2, const Rat& e) const;
  /// Multiply by (1 - c y^{l2/2} q^e).
  JacobiSeries mul_binomial(const CycNum& c, int l2, const Rat& e) const;
  /// Multiply by sum_k (c y^{l2/2} q^e)^k, the expansion of 1/(1 - c y^{l2/2} q^e).
  JacobiSeries div_binomial(const CycNum& c, int l2, const Rat& e) const;
  JacobiSeries truncate(const Rat& v) const;
  JacobiSeries restrict(int lo2, int hi2) const;
  /// z -> -z.
  JacobiSeries reflect() const;
  /// y^l q^e -> e^{2 pi i l t} y^{cy l} q^{cq e}, i.e. z -> cy z + t and
  /// tau -> cq tau. A strip tag survives only when cy == cq.
  JacobiSeries substitute(int cy, const Rat& t, const Rat& cq) const;

  /// y^l -> e^{2 pi i l b} q^{l a}.
  QSeries specialize(const Rat& a, const Rat& b) const;

  Rat min_q() const;

 private:
  void put(int l2, QSeries s);
  static Strip merge(Strip a, Strip b);

  int lo2_, hi2_;
  Rat valid_;
  Strip strip_;
  std::map<int, QSeries> cols_;
};

/// Builder for lattice sums in (y, q).
class JacobiBuilder {
 public:
  void add(int l2, const Rat& exp, const Rat& turn, long weight);
  JacobiSeries finish(int lo2, int hi2, const Rat& q_valid_to) const;

 private:
  std::map<int, SeriesBuilder> cols_;
};

}  // namespace umbral
