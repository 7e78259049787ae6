#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "umbral/cyclotomic.hpp"

namespace umbral {

struct HorizonError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct NotAUnit : std::domain_error {
  using std::domain_error::domain_error;
};

/// Truncated series sum c_e q^e with rational exponents and cyclotomic
/// coefficients. Every term with exponent below valid_to() is known.
///
/// Storage is dense along the progression e0, e0 + h, e0 + 2h, ... with
/// all coefficients written over one conductor and one common
/// denominator; the representation is canonical so structural equality
/// is value equality.
class QSeries {
 public:
  QSeries();

  static QSeries zero(const Rat& valid_to);
  static QSeries constant(const CycNum& c, const Rat& valid_to);
  static QSeries monomial(const Rat& e, const CycNum& c, const Rat& valid_to);
  static QSeries from_terms(const std::vector<std::pair<Rat, CycNum>>& terms, const Rat& valid_to);

  const Rat& valid_to() const { return valid_; }
  Rat min_exp() const { return empty() ? valid_ : e0_; }
  bool is_zero() const { return empty(); }
  std::size_t term_count() const;
  int conductor() const { return n_; }
  const Rat& step() const { return h_; }

  CycNum coeff(const Rat& e) const;
  std::vector<std::pair<Rat, CycNum>> terms() const;
  void for_each_term(const std::function<void(const Rat&, const CycNum&)>& f) const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries& operator+=(const QSeries& b) { return *this = *this + b; }
  QSeries& operator-=(const QSeries& b) { return *this = *this - b; }
  QSeries& operator*=(const QSeries& b) { return *this = *this * b; }
  friend bool operator==(const QSeries& a, const QSeries& b);
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

  QSeries scaled(const CycNum& c) const;
  QSeries inverse() const;
  QSeries pow(long k) const;

  /// tau -> c tau.
  QSeries rescale(const Rat& c) const;
  /// Multiply by q^e.
  QSeries shift(const Rat& e) const;
  /// tau -> tau + t: the term q^e picks up e^{2 pi i e t}.
  QSeries tphase(const Rat& t) const;
  QSeries truncate(const Rat& v) const;
  QSeries filter(const std::function<bool(const Rat&)>& keep) const;

  /// Multiply by (1 - c q^e), resp. divide by it with the expansion in
  /// positive powers of c q^e (e > 0) or of its inverse (e < 0).
  QSeries mul_one_minus(const CycNum& c, const Rat& e) const;
  QSeries div_one_minus(const CycNum& c, const Rat& e) const;

  std::string to_string(std::size_t max_terms = 12) const;

 private:
  bool empty() const { return num_.empty(); }
  std::size_t len() const { return num_.size() / static_cast<std::size_t>(phi_); }
  CycNum slot(std::size_t i) const;
  void normalize();
  void lift_to(int m);
  void refine_step(const Rat& h);
  static QSeries from_slots(const Rat& e0, const Rat& h, const Rat& v, const std::vector<CycNum>& slots);

  friend class SeriesBuilder;
  friend class JacobiSeries;
  friend struct SeriesKernels;

  Rat e0_;
  Rat h_{1};
  Rat valid_;
  int n_ = 1;
  int phi_ = 1;
  Int den_{1};
  std::vector<Int> num_;
};

inline QSeries operator*(const QSeries& a, const CycNum& c) { return a.scaled(c); }
inline QSeries operator*(const CycNum& c, const QSeries& a) { return a.scaled(c); }
inline QSeries operator+(const QSeries& a, const CycNum& c) { return a + QSeries::constant(c, a.valid_to()); }
inline QSeries operator-(const QSeries& a, const CycNum& c) { return a - QSeries::constant(c, a.valid_to()); }
inline QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

/// Accumulates lattice-sum terms weight * e^{2 pi i turn} q^exp and packs
/// them into a QSeries in one pass.
class SeriesBuilder {
 public:
  void add(const Rat& exp, const Rat& turn, long weight);
  void add(const Rat& exp, const CycNum& coeff);
  std::size_t size() const { return roots_.size() + general_.size(); }
  QSeries finish(const Rat& valid_to) const;

 private:
  struct Entry {
    Rat exp;
    Rat turn;
    long weight;
  };
  std::vector<Entry> roots_;
  std::vector<std::pair<Rat, CycNum>> general_;
};

/// Outcome of comparing two truncated series.
struct Verdict {
  bool equal = true;
  Rat checked_to;     // meaningful when equal
  Rat exponent;       // first mismatch otherwise
  CycNum lhs, rhs;
};

Verdict qs_equal(const QSeries& a, const QSeries& b);

/// Re-runs `build` with growing internal headroom until its result is
/// valid to `order`, then truncates there.
template <class F>
QSeries ensure_order(F&& build, const Rat& order) {
  static const long pads[] = {0, 1, 2, 4, 8, 16, 32, 64};
  Rat reached;
  for (long pad : pads) {
    QSeries s = build(order + Rat(pad));
    if (s.valid_to() >= order) return s.truncate(order);
    reached = s.valid_to();
  }
  throw HorizonError("could not reach q^" + order.get_str() + " (best horizon q^" + reached.get_str() + ")");
}

}  // namespace umbral
