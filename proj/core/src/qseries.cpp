#include "umbral/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace umbral {

namespace {

long count_below(const Rat& v, const Rat& e0, const Rat& h) {
  if (v <= e0) return 0;
  Rat t = (v - e0) / h;
  return ceil_rat(t).get_si();
}

long rat_to_long(const Rat& r) {
  if (r.get_den() != 1) throw std::logic_error("expected an integral ratio of exponents");
  return r.get_num().get_si();
}

std::size_t bit_size(const std::vector<Int>& v) {
  std::size_t b = 0;
  for (const auto& x : v) {
    if (mpz_sgn(x.get_mpz_t()) != 0) b = std::max(b, mpz_sizeinbase(x.get_mpz_t(), 2));
  }
  return b;
}

std::size_t bit_length(unsigned long v) {
  std::size_t b = 0;
  while (v) {
    ++b;
    v >>= 1;
  }
  return b;
}

Int from_i128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Int r(static_cast<unsigned long>(u >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL);
  if (neg) r = -r;
  return r;
}

inline bool zero_int(long v) { return v == 0; }
inline bool zero_int(__int128 v) { return v == 0; }
inline bool zero_int(const Int& v) { return mpz_sgn(v.get_mpz_t()) == 0; }

inline void madd(long& d, long x, long y) { d += x * y; }
inline void madd(__int128& d, __int128 x, __int128 y) { d += x * y; }
inline void madd(Int& d, const Int& x, const Int& y) { mpz_addmul(d.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t()); }

inline void madd_si(long& d, long s, long c) { d += s * c; }
inline void madd_si(__int128& d, long s, __int128 c) { d += static_cast<__int128>(s) * c; }
inline void madd_si(Int& d, long s, const Int& c) {
  if (s >= 0) {
    mpz_addmul_ui(d.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(s));
  } else {
    mpz_submul_ui(d.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-s));
  }
}

// out[k] += sum over i*sa + j*sb = k of A[i] B[j], products taken in the field.
template <class T>
void convolve(const std::vector<T>& A, std::size_t la, long sa, const std::vector<T>& B, std::size_t lb,
              long sb, int phi, std::size_t L, const CyclotomicField& f, std::vector<T>& out) {
  out.assign(L * phi, T(0));
  if (phi == 1) {
    for (std::size_t i = 0; i < la; ++i) {
      const std::size_t ia = i * sa;
      if (ia >= L) break;
      if (zero_int(A[i])) continue;
      for (std::size_t j = 0; j < lb; ++j) {
        const std::size_t k = ia + j * sb;
        if (k >= L) break;
        madd(out[k], A[i], B[j]);
      }
    }
    return;
  }
  const std::size_t w = 2 * phi - 1;
  std::vector<T> acc(L * w, T(0));
  for (std::size_t i = 0; i < la; ++i) {
    const std::size_t ia = i * sa;
    if (ia >= L) break;
    const T* x = &A[i * phi];
    bool nz = false;
    for (int r = 0; r < phi && !nz; ++r) nz = !zero_int(x[r]);
    if (!nz) continue;
    for (std::size_t j = 0; j < lb; ++j) {
      const std::size_t k = ia + j * sb;
      if (k >= L) break;
      const T* y = &B[j * phi];
      T* dst = &acc[k * w];
      for (int r = 0; r < phi; ++r) {
        if (zero_int(x[r])) continue;
        for (int s = 0; s < phi; ++s) {
          if (!zero_int(y[s])) madd(dst[r + s], x[r], y[s]);
        }
      }
    }
  }
  for (std::size_t k = 0; k < L; ++k) {
    T* dst = &out[k * phi];
    const T* src = &acc[k * w];
    for (int t = 0; t < phi; ++t) dst[t] = src[t];
    for (std::size_t t = phi; t < w; ++t) {
      if (zero_int(src[t])) continue;
      const auto& row = f.power[t];
      for (int u = 0; u < phi; ++u) {
        if (row[u] != 0) madd_si(dst[u], row[u], src[t]);
      }
    }
  }
}

// Field product of two coefficient blocks, written to out.
void field_mul(const CyclotomicField& f, const Int* a, const Int* b, Int* out, std::vector<Int>& tmp) {
  const int phi = f.phi;
  if (phi == 1) {
    mpz_mul(out[0].get_mpz_t(), a[0].get_mpz_t(), b[0].get_mpz_t());
    return;
  }
  tmp.assign(2 * phi - 1, Int(0));
  for (int r = 0; r < phi; ++r) {
    if (zero_int(a[r])) continue;
    for (int s = 0; s < phi; ++s) {
      if (!zero_int(b[s])) madd(tmp[r + s], a[r], b[s]);
    }
  }
  for (int t = 0; t < phi; ++t) out[t] = tmp[t];
  for (int t = phi; t < 2 * phi - 1; ++t) {
    if (zero_int(tmp[t])) continue;
    const auto& row = f.power[t];
    for (int u = 0; u < phi; ++u) {
      if (row[u] != 0) madd_si(out[u], row[u], tmp[t]);
    }
  }
}

// Integer numerator block of c over its own denominator in conductor m.
void scalar_block(const CycNum& c, int m, std::vector<Int>& block, Int& den) {
  std::vector<Rat> co = c.coeffs_in(m);
  den = 1;
  for (const auto& v : co) den = lcm(den, Int(v.get_den()));
  block.resize(co.size());
  for (std::size_t i = 0; i < co.size(); ++i) block[i] = co[i].get_num() * (den / co[i].get_den());
}

}  // namespace

struct SeriesKernels {
  static void multiply(const QSeries& a, const QSeries& b, long sa, long sb, std::size_t L, QSeries& out) {
    const int phi = a.phi_;
    const auto& f = cyclotomic_field(a.n_);
    const std::size_t la = a.len(), lb = b.len();
    const std::size_t ba = bit_size(a.num_), bb = bit_size(b.num_);
    const std::size_t cnt = std::min(la, lb) * static_cast<std::size_t>(phi);
    const std::size_t tot = ba + bb + bit_length(cnt) + bit_length(static_cast<unsigned long>(phi * f.power_norm)) + 2;
    if (tot <= 62) {
      std::vector<long> A(a.num_.size()), B(b.num_.size()), R;
      for (std::size_t i = 0; i < A.size(); ++i) A[i] = mpz_get_si(a.num_[i].get_mpz_t());
      for (std::size_t i = 0; i < B.size(); ++i) B[i] = mpz_get_si(b.num_[i].get_mpz_t());
      convolve(A, la, sa, B, lb, sb, phi, L, f, R);
      out.num_.resize(R.size());
      for (std::size_t i = 0; i < R.size(); ++i) out.num_[i] = R[i];
    } else if (ba <= 62 && bb <= 62 && tot <= 125) {
      std::vector<__int128> A(a.num_.size()), B(b.num_.size()), R;
      for (std::size_t i = 0; i < A.size(); ++i) A[i] = mpz_get_si(a.num_[i].get_mpz_t());
      for (std::size_t i = 0; i < B.size(); ++i) B[i] = mpz_get_si(b.num_[i].get_mpz_t());
      convolve(A, la, sa, B, lb, sb, phi, L, f, R);
      out.num_.resize(R.size());
      for (std::size_t i = 0; i < R.size(); ++i) out.num_[i] = from_i128(R[i]);
    } else {
      convolve(a.num_, la, sa, b.num_, lb, sb, phi, L, f, out.num_);
    }
  }
};

QSeries::QSeries() = default;

QSeries QSeries::zero(const Rat& v) {
  QSeries s;
  s.valid_ = v;
  s.e0_ = v;
  return s;
}

QSeries QSeries::constant(const CycNum& c, const Rat& v) { return monomial(Rat(0), c, v); }

QSeries QSeries::monomial(const Rat& e, const CycNum& c, const Rat& v) {
  Rat ec = e;
  ec.canonicalize();
  return from_slots(ec, Rat(1), v, {c});
}

QSeries QSeries::from_terms(const std::vector<std::pair<Rat, CycNum>>& raw, const Rat& v) {
  std::vector<std::pair<Rat, CycNum>> terms = raw;
  for (auto& t : terms) t.first.canonicalize();
  bool any = false;
  Rat e0;
  for (const auto& [e, c] : terms) {
    if (e >= v || c.is_zero()) continue;
    if (!any || e < e0) e0 = e;
    any = true;
  }
  if (!any) return zero(v);
  Rat h(0);
  for (const auto& [e, c] : terms) {
    if (e >= v || c.is_zero()) continue;
    h = rat_gcd(h, e - e0);
  }
  if (h == 0) h = 1;
  long L = 0;
  for (const auto& [e, c] : terms) {
    if (e >= v || c.is_zero()) continue;
    L = std::max(L, rat_to_long((e - e0) / h) + 1);
  }
  std::vector<CycNum> slots(L);
  for (const auto& [e, c] : terms) {
    if (e >= v || c.is_zero()) continue;
    slots[rat_to_long((e - e0) / h)] += c;
  }
  return from_slots(e0, h, v, slots);
}

QSeries QSeries::from_slots(const Rat& e0, const Rat& h, const Rat& v, const std::vector<CycNum>& slots) {
  QSeries s;
  s.e0_ = e0;
  s.h_ = h;
  s.valid_ = v;
  int m = 1;
  for (const auto& c : slots) m = lcm_int(m, c.conductor());
  s.n_ = m;
  s.phi_ = cyclotomic_field(m).phi;
  Int den = 1;
  std::vector<std::vector<Rat>> co(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].is_zero()) continue;
    co[i] = slots[i].coeffs_in(m);
    for (const auto& r : co[i]) den = lcm(den, Int(r.get_den()));
  }
  s.den_ = den;
  s.num_.assign(slots.size() * s.phi_, Int(0));
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (co[i].empty()) continue;
    for (int k = 0; k < s.phi_; ++k) s.num_[i * s.phi_ + k] = co[i][k].get_num() * (den / co[i][k].get_den());
  }
  s.normalize();
  return s;
}

void QSeries::normalize() {
  const std::size_t phi = phi_;
  const long cap = count_below(valid_, e0_, h_);
  if (static_cast<long>(len()) > cap) num_.resize(static_cast<std::size_t>(std::max(0L, cap)) * phi);
  auto slot_zero = [&](std::size_t i) {
    for (std::size_t k = 0; k < phi; ++k) {
      if (!zero_int(num_[i * phi + k])) return false;
    }
    return true;
  };
  std::size_t L = len();
  std::size_t first = 0;
  while (first < L && slot_zero(first)) ++first;
  if (first == L) {
    num_.clear();
    e0_ = valid_;
    h_ = 1;
    n_ = 1;
    phi_ = 1;
    den_ = 1;
    return;
  }
  std::size_t last = L - 1;
  while (slot_zero(last)) --last;
  if (first > 0 || last + 1 < L) {
    num_.erase(num_.begin() + static_cast<long>((last + 1) * phi), num_.end());
    num_.erase(num_.begin(), num_.begin() + static_cast<long>(first * phi));
    e0_ += Rat(static_cast<long>(first)) * h_;
    L = len();
  }
  unsigned long g = 0;
  for (std::size_t i = 1; i < L && g != 1; ++i) {
    if (!slot_zero(i)) g = std::gcd(g, static_cast<unsigned long>(i));
  }
  if (g == 0) {
    h_ = 1;
  } else if (g > 1) {
    const std::size_t nl = (L - 1) / g + 1;
    for (std::size_t i = 1; i < nl; ++i) {
      for (std::size_t k = 0; k < phi; ++k) num_[i * phi + k].swap(num_[i * g * phi + k]);
    }
    num_.resize(nl * phi);
    h_ *= Rat(static_cast<long>(g));
    L = nl;
  }
  if (n_ > 1) {
    bool rational = true;
    for (std::size_t i = 0; i < L && rational; ++i) {
      for (std::size_t k = 1; k < phi; ++k) {
        if (!zero_int(num_[i * phi + k])) {
          rational = false;
          break;
        }
      }
    }
    if (rational) {
      for (std::size_t i = 0; i < L; ++i) num_[i].swap(num_[i * phi]);
      num_.resize(L);
      n_ = 1;
      phi_ = 1;
    } else {
      bool moved = true;
      while (moved && n_ > 1) {
        moved = false;
        int n = n_;
        std::vector<int> ps;
        for (int p = 2, t = n; p <= t; ++p) {
          if (t % p == 0) {
            ps.push_back(p);
            while (t % p == 0) t /= p;
          }
        }
        for (int p : ps) {
          int d = n / p;
          if (d % 4 == 2) d /= 2;
          const int phid = cyclotomic_field(d).phi;
          std::vector<Int> packed(L * phid);
          std::vector<Int> out;
          bool ok = true;
          for (std::size_t i = 0; i < L && ok; ++i) {
            ok = project_to_subfield(n, d, &num_[i * phi_], out);
            if (ok) std::copy(out.begin(), out.end(), packed.begin() + static_cast<long>(i * phid));
          }
          if (ok) {
            num_ = std::move(packed);
            n_ = d;
            phi_ = phid;
            moved = true;
            break;
          }
        }
      }
    }
  }
  if (den_ < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  Int c = den_;
  for (const auto& x : num_) {
    if (c == 1) break;
    if (!zero_int(x)) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
  }
  if (c > 1) {
    for (auto& x : num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), c.get_mpz_t());
  }
}

void QSeries::lift_to(int m) {
  if (m == n_) return;
  const int phim = cyclotomic_field(m).phi;
  const std::size_t L = len();
  std::vector<Int> out(L * phim);
  for (std::size_t i = 0; i < L; ++i) lift_coeffs(n_, m, &num_[i * phi_], &out[i * phim]);
  num_ = std::move(out);
  n_ = m;
  phi_ = phim;
}

void QSeries::refine_step(const Rat& h) {
  if (h == h_) return;
  const long t = rat_to_long(h_ / h);
  if (!empty()) {
    const std::size_t L = len();
    std::vector<Int> out(((L - 1) * t + 1) * phi_);
    for (std::size_t i = 0; i < L; ++i) {
      for (int k = 0; k < phi_; ++k) out[i * t * phi_ + k].swap(num_[i * phi_ + k]);
    }
    num_ = std::move(out);
  }
  h_ = h;
}

CycNum QSeries::slot(std::size_t i) const {
  std::vector<Rat> c(phi_);
  for (int k = 0; k < phi_; ++k) {
    c[k] = Rat(num_[i * phi_ + k], den_);
    c[k].canonicalize();
  }
  return CycNum::from_basis(n_, std::move(c));
}

std::size_t QSeries::term_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < len(); ++i) {
    for (int k = 0; k < phi_; ++k) {
      if (!zero_int(num_[i * phi_ + k])) {
        ++c;
        break;
      }
    }
  }
  return c;
}

CycNum QSeries::coeff(const Rat& e) const {
  if (e >= valid_) throw HorizonError("coefficient requested at q^" + e.get_str() + " beyond the validity horizon q^" + valid_.get_str());
  if (empty() || e < e0_) return CycNum();
  Rat t = (e - e0_) / h_;
  if (t.get_den() != 1) return CycNum();
  const long i = t.get_num().get_si();
  if (i >= static_cast<long>(len())) return CycNum();
  return slot(static_cast<std::size_t>(i));
}

void QSeries::for_each_term(const std::function<void(const Rat&, const CycNum&)>& f) const {
  for (std::size_t i = 0; i < len(); ++i) {
    bool nz = false;
    for (int k = 0; k < phi_ && !nz; ++k) nz = !zero_int(num_[i * phi_ + k]);
    if (!nz) continue;
    f(e0_ + Rat(static_cast<long>(i)) * h_, slot(i));
  }
}

std::vector<std::pair<Rat, CycNum>> QSeries::terms() const {
  std::vector<std::pair<Rat, CycNum>> out;
  for_each_term([&](const Rat& e, const CycNum& c) { out.emplace_back(e, c); });
  return out;
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& x : r.num_) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
  return r;
}


QSeries operator+(const QSeries& a, const QSeries& b) {
  const Rat v = std::min(a.valid_, b.valid_);
  if (b.empty()) return a.truncate(v);
  if (a.empty()) return b.truncate(v);
  QSeries r;
  r.valid_ = v;
  r.e0_ = std::min(a.e0_, b.e0_);
  r.h_ = rat_gcd(rat_gcd(a.h_, b.h_), a.e0_ - b.e0_);
  r.n_ = lcm_int(a.n_, b.n_);
  r.phi_ = cyclotomic_field(r.n_).phi;
  r.den_ = lcm(a.den_, b.den_);
  const long cap = count_below(v, r.e0_, r.h_);
  long L = 0;
  for (const QSeries* x : {&a, &b}) {
    const long off = rat_to_long((x->e0_ - r.e0_) / r.h_);
    const long st = rat_to_long(x->h_ / r.h_);
    L = std::max(L, off + st * static_cast<long>(x->len() - 1) + 1);
  }
  L = std::min(L, cap);
  if (L <= 0) return QSeries::zero(v);
  r.num_.assign(static_cast<std::size_t>(L) * r.phi_, Int(0));
  std::vector<Int> tmp(r.phi_);
  for (const QSeries* x : {&a, &b}) {
    const long off = rat_to_long((x->e0_ - r.e0_) / r.h_);
    const long st = rat_to_long(x->h_ / r.h_);
    const Int fac = r.den_ / x->den_;
    for (std::size_t i = 0; i < x->len(); ++i) {
      const long j = off + st * static_cast<long>(i);
      if (j >= L) break;
      const Int* src = &x->num_[i * x->phi_];
      if (x->n_ != r.n_) {
        lift_coeffs(x->n_, r.n_, src, tmp.data());
        src = tmp.data();
      }
      for (int k = 0; k < r.phi_; ++k) {
        if (!zero_int(src[k])) mpz_addmul(r.num_[j * r.phi_ + k].get_mpz_t(), src[k].get_mpz_t(), fac.get_mpz_t());
      }
    }
  }
  r.normalize();
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  const Rat v = std::min(a.valid_ + b.min_exp(), b.valid_ + a.min_exp());
  if (a.empty() || b.empty()) return QSeries::zero(v);
  QSeries r;
  r.valid_ = v;
  r.e0_ = a.e0_ + b.e0_;
  r.h_ = rat_gcd(a.h_, b.h_);
  const long L = count_below(v, r.e0_, r.h_);
  if (L <= 0) return QSeries::zero(v);
  const long sa = rat_to_long(a.h_ / r.h_), sb = rat_to_long(b.h_ / r.h_);
  r.n_ = lcm_int(a.n_, b.n_);
  r.phi_ = cyclotomic_field(r.n_).phi;
  r.den_ = a.den_ * b.den_;
  if (a.n_ == r.n_ && b.n_ == r.n_) {
    SeriesKernels::multiply(a, b, sa, sb, static_cast<std::size_t>(L), r);
  } else {
    QSeries la = a, lb = b;
    la.lift_to(r.n_);
    lb.lift_to(r.n_);
    SeriesKernels::multiply(la, lb, sa, sb, static_cast<std::size_t>(L), r);
  }
  r.normalize();
  return r;
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.valid_ == b.valid_ && a.e0_ == b.e0_ && a.h_ == b.h_ && a.n_ == b.n_ && a.den_ == b.den_ &&
         a.num_ == b.num_;
}

QSeries QSeries::scaled(const CycNum& c) const {
  if (c.is_zero()) return zero(valid_);
  if (empty()) return *this;
  QSeries r = *this;
  if (c.conductor() == 1) {
    const Rat v = *c.to_rational();
    if (v.get_num() != 1) {
      for (auto& x : r.num_) x *= v.get_num();
    }
    r.den_ *= v.get_den();
    r.normalize();
    return r;
  }
  const int m = lcm_int(n_, c.conductor());
  r.lift_to(m);
  std::vector<Int> block;
  Int cden;
  scalar_block(c, m, block, cden);
  const auto& f = cyclotomic_field(m);
  std::vector<Int> tmp, out(r.phi_);
  for (std::size_t i = 0; i < r.len(); ++i) {
    field_mul(f, &r.num_[i * r.phi_], block.data(), out.data(), tmp);
    for (int k = 0; k < r.phi_; ++k) r.num_[i * r.phi_ + k].swap(out[k]);
  }
  r.den_ *= cden;
  r.normalize();
  return r;
}

QSeries QSeries::inverse() const {
  if (empty()) throw NotAUnit("inverse of a series with no known leading term");
  const Rat m = e0_;
  const CycNum lead_inv = slot(0).inverse();
  QSeries u = shift(-m).scaled(lead_inv);
  const int phi = u.phi_;
  const auto& f = cyclotomic_field(u.n_);
  const long L = count_below(u.valid_, Rat(0), u.h_);
  const std::size_t lu = u.len();
  const Int d = u.den_;
  // N_k d^{k-1} for k >= 1
  std::vector<Int> nd(lu * phi);
  Int dp = 1;
  for (std::size_t k = 1; k < lu; ++k) {
    for (int t = 0; t < phi; ++t) nd[k * phi + t] = u.num_[k * phi + t] * dp;
    dp *= d;
  }
  std::vector<Int> c(static_cast<std::size_t>(L) * phi);
  c[0] = 1;
  const std::size_t w = 2 * phi - 1;
  std::vector<Int> acc(w);
  for (long n = 1; n < L; ++n) {
    for (auto& x : acc) x = 0;
    const long kmax = std::min<long>(n, static_cast<long>(lu) - 1);
    for (long k = 1; k <= kmax; ++k) {
      const Int* x = &nd[k * phi];
      const Int* y = &c[(n - k) * phi];
      for (int r = 0; r < phi; ++r) {
        if (zero_int(x[r])) continue;
        for (int s = 0; s < phi; ++s) {
          if (!zero_int(y[s])) madd(acc[r + s], x[r], y[s]);
        }
      }
    }
    Int* dst = &c[n * phi];
    for (int t = 0; t < phi; ++t) dst[t] = -acc[t];
    for (std::size_t t = phi; t < w; ++t) {
      if (zero_int(acc[t])) continue;
      const auto& row = f.power[t];
      for (int q = 0; q < phi; ++q) {
        if (row[q] != 0) madd_si(dst[q], -row[q], acc[t]);
      }
    }
  }
  // b_n = C_n / d^n, written over d^{L-1}
  QSeries r;
  r.e0_ = -m;
  r.h_ = u.h_;
  r.valid_ = u.valid_ - m;
  r.n_ = u.n_;
  r.phi_ = phi;
  Int top = 1;
  for (long n = L - 1; n >= 0; --n) {
    for (int t = 0; t < phi; ++t) c[n * phi + t] *= top;
    top *= d;
  }
  r.den_ = top / d;
  if (L == 0) r.den_ = 1;
  r.num_ = std::move(c);
  r.normalize();
  return lead_inv.is_one() ? r : r.scaled(lead_inv);
}

QSeries QSeries::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == 0) return constant(CycNum(1L), valid_ - min_exp());
  QSeries base = *this;
  QSeries r;
  bool have = false;
  while (k > 0) {
    if (k & 1) {
      r = have ? r * base : base;
      have = true;
    }
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return r;
}

QSeries QSeries::rescale(const Rat& c) const {
  if (c <= 0) throw std::invalid_argument("rescale factor must be positive");
  QSeries r = *this;
  r.e0_ *= c;
  r.h_ *= c;
  r.valid_ *= c;
  if (r.empty()) r.h_ = 1;
  return r;
}

QSeries QSeries::shift(const Rat& e) const {
  QSeries r = *this;
  r.e0_ += e;
  r.valid_ += e;
  return r;
}

QSeries QSeries::tphase(const Rat& t) const {
  if (empty()) return *this;
  std::vector<CycNum> slots(len());
  const CycNum first = CycNum::root_of_unity(t * e0_);
  const CycNum ratio = CycNum::root_of_unity(t * h_);
  CycNum ph = first;
  for (std::size_t i = 0; i < len(); ++i) {
    slots[i] = slot(i) * ph;
    ph *= ratio;
  }
  return from_slots(e0_, h_, valid_, slots);
}

QSeries QSeries::truncate(const Rat& v) const {
  if (v >= valid_) return *this;
  QSeries r = *this;
  r.valid_ = v;
  if (r.empty()) {
    r.e0_ = v;
    return r;
  }
  r.normalize();
  return r;
}

QSeries QSeries::filter(const std::function<bool(const Rat&)>& keep) const {
  QSeries r = *this;
  for (std::size_t i = 0; i < len(); ++i) {
    if (keep(e0_ + Rat(static_cast<long>(i)) * h_)) continue;
    for (int k = 0; k < phi_; ++k) r.num_[i * phi_ + k] = 0;
  }
  r.normalize();
  return r;
}

QSeries QSeries::mul_one_minus(const CycNum& c, const Rat& e) const {
  if (e == 0) return scaled(CycNum(1L) - c);
  if (e < 0) return shift(e).scaled(-c).mul_one_minus(c.inverse(), -e);
  if (empty() || c.is_zero()) return *this;
  QSeries r = *this;
  r.refine_step(rat_gcd(h_, e));
  const long s = rat_to_long(e / r.h_);
  const int m = lcm_int(r.n_, c.conductor());
  r.lift_to(m);
  std::vector<Int> block;
  Int cden;
  scalar_block(c, m, block, cden);
  const auto& f = cyclotomic_field(m);
  const long cap = count_below(r.valid_, r.e0_, r.h_);
  const long la = static_cast<long>(r.len());
  const long L = std::min(cap, la + s);
  const int phi = r.phi_;
  std::vector<Int> out(static_cast<std::size_t>(L) * phi), tmp, prod(phi);
  for (long i = 0; i < L; ++i) {
    if (i < la) {
      for (int k = 0; k < phi; ++k) out[i * phi + k] = r.num_[i * phi + k] * cden;
    }
    if (i - s >= 0 && i - s < la) {
      field_mul(f, &r.num_[(i - s) * phi], block.data(), prod.data(), tmp);
      for (int k = 0; k < phi; ++k) out[i * phi + k] -= prod[k];
    }
  }
  r.num_ = std::move(out);
  r.den_ *= cden;
  r.normalize();
  return r;
}

QSeries QSeries::div_one_minus(const CycNum& c, const Rat& e) const {
  if (e == 0) {
    const CycNum u = CycNum(1L) - c;
    if (u.is_zero()) throw NotAUnit("division by 1 - 1");
    return scaled(u.inverse());
  }
  if (e < 0) {
    const CycNum ci = c.inverse();
    return shift(-e).scaled(-ci).div_one_minus(ci, -e);
  }
  if (empty() || c.is_zero()) return *this;
  QSeries r = *this;
  r.refine_step(rat_gcd(h_, e));
  const long s = rat_to_long(e / r.h_);
  const int m = lcm_int(r.n_, c.conductor());
  r.lift_to(m);
  std::vector<Int> block;
  Int cden;
  scalar_block(c, m, block, cden);
  const long L = count_below(r.valid_, r.e0_, r.h_);
  const long la = static_cast<long>(r.len());
  const int phi = r.phi_;
  const auto& f = cyclotomic_field(m);
  if (cden != 1) {
    // rational-coefficient ratio: fall back to the explicit geometric series
    std::vector<std::pair<Rat, CycNum>> geo;
    CycNum p(1L);
    for (Rat x = 0; x < r.valid_ - r.e0_; x += e) {
      geo.emplace_back(x, p);
      p *= c;
    }
    return *this * from_terms(geo, r.valid_ - r.e0_);
  }
  std::vector<Int> out(static_cast<std::size_t>(L) * phi), tmp, prod(phi);
  for (long i = 0; i < L; ++i) {
    if (i < la) {
      for (int k = 0; k < phi; ++k) out[i * phi + k] = r.num_[i * phi + k];
    }
    if (i - s >= 0) {
      field_mul(f, &out[(i - s) * phi], block.data(), prod.data(), tmp);
      for (int k = 0; k < phi; ++k) out[i * phi + k] += prod[k];
    }
  }
  r.num_ = std::move(out);
  r.normalize();
  return r;
}

std::string QSeries::to_string(std::size_t max_terms) const {
  std::ostringstream os;
  std::size_t shown = 0;
  bool more = false;
  for_each_term([&](const Rat& e, const CycNum& c) {
    if (shown >= max_terms) {
      more = true;
      return;
    }
    if (shown) os << " + ";
    os << "(" << c.to_string() << ")q^" << e.get_str();
    ++shown;
  });
  if (more) os << " + ...";
  if (!shown) os << "0";
  os << " + O(q^" << valid_.get_str() << ")";
  return os.str();
}

void SeriesBuilder::add(const Rat& exp, const Rat& t, long weight) {
  if (weight == 0) return;
  roots_.push_back({exp, t, weight});
  roots_.back().exp.canonicalize();
  roots_.back().turn.canonicalize();
}

void SeriesBuilder::add(const Rat& exp, const CycNum& coeff) {
  if (!coeff.is_zero()) general_.emplace_back(exp, coeff);
}

QSeries SeriesBuilder::finish(const Rat& v) const {
  QSeries extra = QSeries::from_terms(general_, v);
  bool any = false;
  Rat e0;
  int big = 1;
  for (const auto& en : roots_) {
    if (en.exp >= v) continue;
    if (!any || en.exp < e0) e0 = en.exp;
    any = true;
    big = lcm_int(big, static_cast<int>(frac_part(en.turn).get_den().get_si()));
  }
  if (!any) return extra;
  Rat h(0);
  for (const auto& en : roots_) {
    if (en.exp < v) h = rat_gcd(h, en.exp - e0);
  }
  if (h == 0) h = 1;
  const int m = canonical_conductor(big);
  const auto& f = cyclotomic_field(m);
  long L = 0;
  std::vector<long> idx(roots_.size(), -1);
  for (std::size_t t = 0; t < roots_.size(); ++t) {
    if (roots_[t].exp >= v) continue;
    idx[t] = rat_to_long((roots_[t].exp - e0) / h);
    L = std::max(L, idx[t] + 1);
  }
  const int phi = f.phi;
  std::vector<long> acc(static_cast<std::size_t>(L) * phi, 0);
  std::vector<Int> wide;
  bool overflow = false;
  for (std::size_t t = 0; t < roots_.size(); ++t) {
    if (idx[t] < 0) continue;
    long k = rat_to_long(frac_part(roots_[t].turn) * Rat(big));
    long sign = 1;
    if (m != big) {
      const long half = m;  // big = 2m with m odd
      if (k % 2) sign = -1;
      k = (k * ((half + 1) / 2)) % half;
    }
    const auto& row = f.power[k];
    const long wgt = sign * roots_[t].weight;
    for (int u = 0; u < phi; ++u) {
      if (row[u] == 0) continue;
      long& slot = acc[idx[t] * phi + u];
      if (__builtin_add_overflow(slot, row[u] * wgt, &slot)) overflow = true;
    }
  }
  if (overflow) throw std::overflow_error("lattice sum weights overflowed 64-bit accumulation");
  QSeries r;
  r.e0_ = e0;
  r.h_ = h;
  r.valid_ = v;
  r.n_ = m;
  r.phi_ = phi;
  r.den_ = 1;
  r.num_.resize(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r.num_[i] = acc[i];
  r.normalize();
  return r + extra;
}

Verdict qs_equal(const QSeries& a, const QSeries& b) {
  Verdict out;
  const Rat v = std::min(a.valid_to(), b.valid_to());
  const QSeries d = a.truncate(v) - b.truncate(v);
  if (d.is_zero()) {
    out.equal = true;
    out.checked_to = v;
    return out;
  }
  out.equal = false;
  out.exponent = d.min_exp();
  out.lhs = a.coeff(out.exponent);
  out.rhs = b.coeff(out.exponent);
  return out;
}

}  // namespace umbral
