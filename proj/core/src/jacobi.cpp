#include "umbral/jacobi.hpp"

#include <algorithm>

namespace umbral {

JacobiSeries::JacobiSeries(int lo2, int hi2, const Rat& v, Strip strip)
    : lo2_(lo2), hi2_(hi2), valid_(v), strip_(strip) {
  if (lo2 > hi2) throw std::invalid_argument("empty y window");
}

JacobiSeries JacobiSeries::monomial(int l2, const Rat& e, const CycNum& c, int lo2, int hi2, const Rat& v) {
  JacobiSeries j(lo2, hi2, v);
  j.put(l2, QSeries::monomial(e, c, v));
  return j;
}

JacobiSeries JacobiSeries::from_qseries(const QSeries& s, int lo2, int hi2) {
  JacobiSeries j(lo2, hi2, s.valid_to());
  j.put(0, s);
  return j;
}

JacobiSeries& JacobiSeries::tag(Strip s) {
  strip_ = merge(strip_, s);
  return *this;
}

Strip JacobiSeries::merge(Strip a, Strip b) {
  if (a == Strip::None) return b;
  if (b == Strip::None || a == b) return a;
  throw StripConflict("combining expansions taken in opposite strips");
}

void JacobiSeries::put(int l2, QSeries s) {
  if (l2 < lo2_ || l2 > hi2_) return;
  s = s.truncate(valid_);
  if (s.is_zero()) {
    cols_.erase(l2);
    return;
  }
  cols_[l2] = std::move(s);
}

QSeries JacobiSeries::column(int l2) const {
  if (l2 < lo2_ || l2 > hi2_) throw HorizonError("y-power outside the complete window");
  auto it = cols_.find(l2);
  return it == cols_.end() ? QSeries::zero(valid_) : it->second;
}

void JacobiSeries::add_to_column(int l2, const QSeries& s) {
  if (s.valid_to() < valid_) {
    valid_ = s.valid_to();
    for (auto& [l, c] : cols_) c = c.truncate(valid_);
  }
  put(l2, column(l2) + s);
}

Rat JacobiSeries::min_q() const {
  Rat m = valid_;
  for (const auto& [l, c] : cols_) m = std::min(m, c.min_exp());
  return m;
}

JacobiSeries JacobiSeries::operator-() const {
  JacobiSeries r = *this;
  for (auto& [l, c] : r.cols_) c = -c;
  return r;
}

JacobiSeries operator+(const JacobiSeries& a, const JacobiSeries& b) {
  JacobiSeries r(std::max(a.lo2_, b.lo2_), std::min(a.hi2_, b.hi2_), std::min(a.valid_, b.valid_),
                 JacobiSeries::merge(a.strip_, b.strip_));
  for (const auto& [l, c] : a.cols_) r.put(l, c);
  for (const auto& [l, c] : b.cols_) {
    if (l < r.lo2_ || l > r.hi2_) continue;
    r.put(l, r.column(l) + c);
  }
  return r;
}

JacobiSeries operator-(const JacobiSeries& a, const JacobiSeries& b) { return a + (-b); }

JacobiSeries operator*(const JacobiSeries& a, const JacobiSeries& b) {
  const Rat v = std::min(a.valid_ + b.min_q(), b.valid_ + a.min_q());
  JacobiSeries r(std::max(a.lo2_, b.lo2_), std::min(a.hi2_, b.hi2_), v, JacobiSeries::merge(a.strip_, b.strip_));
  std::map<int, QSeries> acc;
  for (const auto& [l1, c1] : a.cols_) {
    for (const auto& [l2, c2] : b.cols_) {
      const int l = l1 + l2;
      if (l < r.lo2_ || l > r.hi2_) continue;
      QSeries p = (c1 * c2).truncate(v);
      auto it = acc.find(l);
      if (it == acc.end()) {
        acc.emplace(l, std::move(p));
      } else {
        it->second += p;
      }
    }
  }
  for (auto& [l, c] : acc) r.put(l, c);
  return r;
}

bool operator==(const JacobiSeries& a, const JacobiSeries& b) {
  return a.lo2_ == b.lo2_ && a.hi2_ == b.hi2_ && a.valid_ == b.valid_ && a.cols_ == b.cols_;
}

JacobiSeries JacobiSeries::scaled(const CycNum& c) const {
  JacobiSeries r(lo2_, hi2_, valid_, strip_);
  for (const auto& [l, s] : cols_) r.put(l, s.scaled(c));
  return r;
}

JacobiSeries JacobiSeries::times(const QSeries& f) const {
  const Rat v = std::min(valid_ + f.min_exp(), f.valid_to() + min_q());
  JacobiSeries r(lo2_, hi2_, v, strip_);
  for (const auto& [l, s] : cols_) r.put(l, s * f);
  return r;
}

JacobiSeries JacobiSeries::shifted(int l2, const Rat& e) const {
  JacobiSeries r(lo2_, hi2_, valid_ + e, strip_);
  for (const auto& [l, s] : cols_) r.put(l + l2, s.shift(e));
  return r;
}

JacobiSeries JacobiSeries::mul_binomial(const CycNum& c, int l2, const Rat& e) const {
  if (l2 == 0) {
    JacobiSeries r(lo2_, hi2_, valid_ + std::min(Rat(0), e), strip_);
    for (const auto& [l, s] : cols_) r.put(l, s.mul_one_minus(c, e));
    return r;
  }
  if (e < 0) throw std::invalid_argument("mul_binomial expects a non-negative q power");
  JacobiSeries r = *this;
  for (const auto& [l, s] : cols_) {
    const int t = l + l2;
    if (t < lo2_ || t > hi2_) continue;
    r.put(t, r.column(t) - s.shift(e).scaled(c));
  }
  return r;
}

JacobiSeries JacobiSeries::div_binomial(const CycNum& c, int l2, const Rat& e) const {
  if (e < 0) throw std::invalid_argument("div_binomial expects a non-negative q power");
  if (l2 == 0) {
    JacobiSeries r(lo2_, hi2_, valid_, strip_);
    for (const auto& [l, s] : cols_) r.put(l, s.div_one_minus(c, e));
    return r;
  }
  JacobiSeries r(lo2_, hi2_, valid_, strip_);
  // b_L = a_L + c q^e b_{L - l2}, swept away from the source side
  auto step = [&](int L) {
    QSeries b = column(L);
    auto prev = r.cols_.find(L - l2);
    if (prev != r.cols_.end()) b += prev->second.shift(e).scaled(c);
    r.put(L, b);
  };
  if (l2 > 0) {
    for (int L = lo2_; L <= hi2_; ++L) step(L);
  } else {
    for (int L = hi2_; L >= lo2_; --L) step(L);
  }
  return r;
}

JacobiSeries JacobiSeries::truncate(const Rat& v) const {
  JacobiSeries r(lo2_, hi2_, std::min(v, valid_), strip_);
  for (const auto& [l, s] : cols_) r.put(l, s);
  return r;
}

JacobiSeries JacobiSeries::restrict(int lo2, int hi2) const {
  JacobiSeries r(std::max(lo2, lo2_), std::min(hi2, hi2_), valid_, strip_);
  for (const auto& [l, s] : cols_) r.put(l, s);
  return r;
}

JacobiSeries JacobiSeries::reflect() const {
  Strip s = strip_ == Strip::Lower ? Strip::Upper : strip_ == Strip::Upper ? Strip::Lower : Strip::None;
  JacobiSeries r(-hi2_, -lo2_, valid_, s);
  for (const auto& [l, c] : cols_) r.put(-l, c);
  return r;
}

JacobiSeries JacobiSeries::substitute(int cy, const Rat& t, const Rat& cq) const {
  if (cy <= 0 || cq <= 0) throw std::invalid_argument("substitution scales must be positive");
  if (strip_ != Strip::None && Rat(cy) != cq) {
    throw StripConflict("rescaling z and tau differently moves the expansion strip");
  }
  JacobiSeries r(cy * lo2_, cy * hi2_, valid_ * cq, strip_);
  for (const auto& [l2, s] : cols_) {
    const Rat l = ratio(l2, 2);
    r.put(cy * l2, s.rescale(cq).scaled(turn(l * t)));
  }
  return r;
}

QSeries JacobiSeries::specialize(const Rat& a, const Rat& b) const {
  if (strip_ == Strip::Lower && !(a > -1 && a < 0)) {
    throw StripConflict("specialization point outside the lower strip");
  }
  if (strip_ == Strip::Upper && !(a > 0 && a < 1)) {
    throw StripConflict("specialization point outside the upper strip");
  }
  Rat lo(lo2_, 2), hi(hi2_, 2);
  lo.canonicalize();
  hi.canonicalize();
  const Rat v = valid_ + std::min({Rat(0), Rat(a * lo), Rat(a * hi)});
  QSeries out = QSeries::zero(v);
  Rat lowest = v;
  for (const auto& [l2, s] : cols_) {
    Rat l(l2, 2);
    l.canonicalize();
    lowest = std::min(lowest, Rat(s.min_exp() + l * a));
    out += s.shift(l * a).scaled(turn(l * b)).truncate(v);
  }
  if (!cols_.empty() && lowest >= v) throw HorizonError("specialization leaves no valid q range");
  return out;
}

void JacobiBuilder::add(int l2, const Rat& exp, const Rat& t, long weight) { cols_[l2].add(exp, t, weight); }

JacobiSeries JacobiBuilder::finish(int lo2, int hi2, const Rat& v) const {
  JacobiSeries j(lo2, hi2, v);
  for (const auto& [l, b] : cols_) {
    if (l < lo2 || l > hi2) continue;
    j.add_to_column(l, b.finish(v));
  }
  return j;
}

}  // namespace umbral
