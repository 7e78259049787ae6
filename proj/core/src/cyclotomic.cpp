#include "umbral/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace umbral {

namespace {

using Poly = std::vector<long>;

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

long radical(int n) {
  long r = 1;
  for (int p : prime_factors(n)) r *= p;
  return r;
}

// Exact division of integer polynomials with monic divisor.
Poly poly_div_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly quo(num.size() - dn, 0);
  for (long i = static_cast<long>(num.size()) - 1; i >= static_cast<long>(dn); --i) {
    const long lead = num[i];
    quo[i - dn] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= lead * den[j];
  }
  return quo;
}

Poly cyclotomic_poly(int n) {
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_div_exact(p, cyclotomic_poly(d));
  }
  return p;
}

std::unique_ptr<CyclotomicField> build_field(int n) {
  auto f = std::make_unique<CyclotomicField>();
  f->n = n;
  f->modulus = cyclotomic_poly(n);
  f->phi = static_cast<int>(f->modulus.size()) - 1;
  const int phi = f->phi;
  const int count = 2 * n > 2 * phi ? 2 * n : 2 * phi;
  f->power.assign(count, std::vector<long>(phi, 0));
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (int j = 0; j < count; ++j) {
    f->power[j] = cur;
    // multiply by zeta: shift up, fold the overflow through the modulus
    long top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < phi; ++i) cur[i] -= top * f->modulus[i];
    }
  }
  long norm = 1;
  for (const auto& row : f->power) {
    long s = 0;
    for (long v : row) s += std::labs(v);
    norm = std::max(norm, s);
  }
  f->power_norm = norm;
  return f;
}

struct FieldCache {
  std::shared_mutex mu;
  std::map<int, std::unique_ptr<CyclotomicField>> fields;
};

FieldCache& field_cache() {
  static FieldCache cache;
  return cache;
}

// Left inverse on a selected row subset of the embedding matrix of
// Q(zeta_d) into Q(zeta_n).
struct Embedding {
  bool index_only = false;  // same radical: subfield is read off fixed indices
  int stride = 1;
  int phi_n = 0, phi_d = 0;
  std::vector<std::vector<long>> image;   // phi_n x phi_d
  std::vector<int> rows;                  // chosen rows, size phi_d
  std::vector<std::vector<Rat>> left;     // phi_d x phi_d acting on chosen rows
};

std::unique_ptr<Embedding> build_embedding(int n, int d) {
  auto e = std::make_unique<Embedding>();
  const auto& fn = cyclotomic_field(n);
  const auto& fd = cyclotomic_field(d);
  e->phi_n = fn.phi;
  e->phi_d = fd.phi;
  e->stride = n / d;
  if (radical(n) == radical(d)) {
    e->index_only = true;
    return e;
  }
  e->image.assign(fn.phi, std::vector<long>(fd.phi, 0));
  for (int k = 0; k < fd.phi; ++k) {
    const auto& col = fn.power[k * e->stride];
    for (int i = 0; i < fn.phi; ++i) e->image[i][k] = col[i];
  }
  // Greedy row selection by elimination on the transposed image.
  std::vector<std::vector<Rat>> basis;  // reduced rows chosen so far
  std::vector<int> pivots;
  for (int i = 0; i < fn.phi && static_cast<int>(e->rows.size()) < fd.phi; ++i) {
    std::vector<Rat> r(fd.phi);
    for (int k = 0; k < fd.phi; ++k) r[k] = e->image[i][k];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rat f = r[pivots[b]];
      if (f != 0) {
        for (int k = 0; k < fd.phi; ++k) r[k] -= f * basis[b][k];
      }
    }
    int piv = -1;
    for (int k = 0; k < fd.phi; ++k) {
      if (r[k] != 0) {
        piv = k;
        break;
      }
    }
    if (piv < 0) continue;
    const Rat inv = 1 / r[piv];
    for (auto& v : r) v *= inv;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rat f = basis[b][piv];
      if (f != 0) {
        for (int k = 0; k < fd.phi; ++k) basis[b][k] -= f * r[k];
      }
    }
    basis.push_back(std::move(r));
    pivots.push_back(piv);
    e->rows.push_back(i);
  }
  // Invert the square submatrix image[rows][*].
  const int m = fd.phi;
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(2 * m));
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k < m; ++k) a[r][k] = e->image[e->rows[r]][k];
    a[r][m + r] = 1;
  }
  for (int col = 0; col < m; ++col) {
    int piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    const Rat inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (int k = 0; k < 2 * m; ++k) a[r][k] -= f * a[col][k];
    }
  }
  e->left.assign(m, std::vector<Rat>(m));
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k < m; ++k) e->left[r][k] = a[r][m + k];
  }
  return e;
}

const Embedding& embedding(int n, int d) {
  static std::shared_mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Embedding>> cache;
  const auto key = std::make_pair(n, d);
  {
    std::shared_lock lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto built = build_embedding(n, d);
  std::unique_lock lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(built));
  return *it->second;
}

template <class T>
bool project_impl(int n, int d, const T* x, std::vector<T>& out) {
  const Embedding& e = embedding(n, d);
  out.assign(e.phi_d, T(0));
  if (e.index_only) {
    for (int i = 0; i < e.phi_n; ++i) {
      if (i % e.stride != 0 && x[i] != 0) return false;
    }
    for (int k = 0; k < e.phi_d; ++k) out[k] = x[k * e.stride];
    return true;
  }
  std::vector<Rat> y(e.phi_d);
  for (int r = 0; r < e.phi_d; ++r) {
    Rat s = 0;
    for (int k = 0; k < e.phi_d; ++k) {
      if (e.left[r][k] != 0) s += e.left[r][k] * x[e.rows[k]];
    }
    y[r] = s;
  }
  for (int i = 0; i < e.phi_n; ++i) {
    Rat s = 0;
    for (int k = 0; k < e.phi_d; ++k) {
      if (e.image[i][k] != 0) s += e.image[i][k] * y[k];
    }
    if (s != x[i]) return false;
  }
  for (int k = 0; k < e.phi_d; ++k) {
    if constexpr (std::is_same_v<T, Int>) {
      // integral input stays integral: Z[zeta_n] meets Q(zeta_d) in Z[zeta_d]
      out[k] = y[k].get_num();
    } else {
      out[k] = y[k];
    }
  }
  return true;
}

}  // namespace

int euler_phi(int n) {
  int r = n;
  for (int p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

int canonical_conductor(int n) {
  if (n <= 0) throw std::invalid_argument("conductor must be positive");
  return (n % 4 == 2) ? n / 2 : n;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

const CyclotomicField& cyclotomic_field(int n) {
  auto& cache = field_cache();
  {
    std::shared_lock lock(cache.mu);
    auto it = cache.fields.find(n);
    if (it != cache.fields.end()) return *it->second;
  }
  auto built = build_field(n);
  std::unique_lock lock(cache.mu);
  auto [it, inserted] = cache.fields.emplace(n, std::move(built));
  return *it->second;
}

bool project_to_subfield(int n, int d, const Int* x, std::vector<Int>& out) {
  return project_impl<Int>(n, d, x, out);
}

bool project_to_subfield(int n, int d, const std::vector<Rat>& x, std::vector<Rat>& out) {
  return project_impl<Rat>(n, d, x.data(), out);
}

void lift_coeffs(int d, int m, const Int* x, Int* out) {
  const auto& fm = cyclotomic_field(m);
  const auto& fd = cyclotomic_field(d);
  const int stride = m / d;
  for (int i = 0; i < fm.phi; ++i) out[i] = 0;
  for (int k = 0; k < fd.phi; ++k) {
    if (x[k] == 0) continue;
    const auto& row = fm.power[k * stride];
    for (int i = 0; i < fm.phi; ++i) {
      if (row[i] != 0) out[i] += row[i] * x[k];
    }
  }
}

Rat frac_part(const Rat& raw) {
  Rat t = raw;
  t.canonicalize();
  Int q = floor_rat(t);
  Rat r = t - Rat(q);
  r.canonicalize();
  return r;
}

Int floor_rat(const Rat& t) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return q;
}

Int ceil_rat(const Rat& t) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return q;
}

Rat rat_gcd(const Rat& a, const Rat& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  Int num = gcd(Int(a.get_num() * b.get_den()), Int(b.get_num() * a.get_den()));
  Rat r(num, Int(a.get_den() * b.get_den()));
  r.canonicalize();
  return r;
}

std::string rat_string(const Rat& r) { return r.get_str(); }

CycNum::CycNum() : c_{Rat(0)} {}
CycNum::CycNum(long v) : c_{Rat(v)} {}
CycNum::CycNum(const Int& v) : c_{Rat(v)} {}
CycNum::CycNum(const Rat& v) : c_{v} { c_[0].canonicalize(); }

CycNum CycNum::root_of_unity(const Rat& t) {
  const Rat f = frac_part(t);
  const long q = f.get_den().get_si();
  const long p = f.get_num().get_si();
  if (q == 1) return CycNum(1L);
  if (q == 2) return CycNum(-1L);
  CycNum out;
  if (q % 4 == 2) {
    const long m = q / 2;
    long k = ((p - m) / 2) % m;
    if (k < 0) k += m;
    const auto& fld = cyclotomic_field(static_cast<int>(m));
    out.n_ = static_cast<int>(m);
    out.c_.assign(fld.phi, Rat(0));
    for (int i = 0; i < fld.phi; ++i) out.c_[i] = -fld.power[k][i];
  } else {
    const auto& fld = cyclotomic_field(static_cast<int>(q));
    out.n_ = static_cast<int>(q);
    out.c_.assign(fld.phi, Rat(0));
    for (int i = 0; i < fld.phi; ++i) out.c_[i] = fld.power[p][i];
  }
  return out;
}

CycNum CycNum::from_powers(int n, const std::vector<Rat>& c) {
  const int m = canonical_conductor(n);
  CycNum out;
  if (m != n) {
    // zeta_n = -zeta_m^{(m+1)/2} for n = 2m with m odd
    std::vector<Rat> folded(m, Rat(0));
    const long half = (m + 1) / 2;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      const long kk = static_cast<long>(k % n);
      const Rat sign = (kk % 2) ? Rat(-1) : Rat(1);
      folded[(kk * half) % m] += sign * c[k];
    }
    return from_powers(m, folded);
  }
  const auto& fld = cyclotomic_field(m);
  out.n_ = m;
  out.c_.assign(fld.phi, Rat(0));
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    Rat ck = c[k];
    ck.canonicalize();
    const auto& row = fld.power[k % m];
    for (int i = 0; i < fld.phi; ++i) {
      if (row[i] != 0) out.c_[i] += row[i] * ck;
    }
  }
  out.minimize();
  return out;
}

CycNum CycNum::from_basis(int n, std::vector<Rat> c) {
  CycNum out;
  out.n_ = n;
  out.c_ = std::move(c);
  for (auto& v : out.c_) v.canonicalize();
  out.minimize();
  return out;
}

std::vector<Rat> CycNum::coeffs_in(int m) const {
  if (m % n_ != 0) throw std::invalid_argument("coeffs_in: target conductor is not a multiple");
  const auto& fm = cyclotomic_field(m);
  std::vector<Rat> out(fm.phi, Rat(0));
  const int stride = m / n_;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const auto& row = fm.power[k * stride];
    for (int i = 0; i < fm.phi; ++i) {
      if (row[i] != 0) out[i] += row[i] * c_[k];
    }
  }
  return out;
}

void CycNum::minimize() {
  bool rational = true;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) {
      rational = false;
      break;
    }
  }
  if (rational) {
    c_.resize(1);
    n_ = 1;
    return;
  }
  bool moved = true;
  while (moved && n_ > 1) {
    moved = false;
    for (int p : prime_factors(n_)) {
      int d = n_ / p;
      if (d % 4 == 2) d /= 2;
      std::vector<Rat> y;
      if (project_to_subfield(n_, d, c_, y)) {
        n_ = d;
        c_ = std::move(y);
        moved = true;
        break;
      }
    }
  }
}

bool CycNum::is_zero() const { return n_ == 1 && c_[0] == 0; }
bool CycNum::is_one() const { return n_ == 1 && c_[0] == 1; }

std::optional<Rat> CycNum::to_rational() const {
  if (n_ != 1) return std::nullopt;
  return c_[0];
}

std::optional<Int> CycNum::to_integer() const {
  if (n_ != 1 || c_[0].get_den() != 1) return std::nullopt;
  return c_[0].get_num();
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.n_ == n_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else {
    const int m = lcm_int(n_, o.n_);
    std::vector<Rat> a = coeffs_in(m);
    std::vector<Rat> b = o.coeffs_in(m);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    n_ = m;
    c_ = std::move(a);
  }
  minimize();
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.n_ == 1) {
    for (auto& v : c_) v *= o.c_[0];
    if (o.c_[0] == 0) {
      n_ = 1;
      c_.assign(1, Rat(0));
    }
    return *this;
  }
  if (n_ == 1) {
    const Rat s = c_[0];
    *this = o;
    for (auto& v : c_) v *= s;
    if (s == 0) {
      n_ = 1;
      c_.assign(1, Rat(0));
    }
    return *this;
  }
  const int m = lcm_int(n_, o.n_);
  const auto& fld = cyclotomic_field(m);
  std::vector<Rat> a = coeffs_in(m);
  std::vector<Rat> b = o.coeffs_in(m);
  std::vector<Rat> t(2 * fld.phi - 1, Rat(0));
  for (int i = 0; i < fld.phi; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < fld.phi; ++j) {
      if (b[j] != 0) t[i + j] += a[i] * b[j];
    }
  }
  std::vector<Rat> r(t.begin(), t.begin() + fld.phi);
  for (int k = fld.phi; k < 2 * fld.phi - 1; ++k) {
    if (t[k] == 0) continue;
    const auto& row = fld.power[k];
    for (int i = 0; i < fld.phi; ++i) {
      if (row[i] != 0) r[i] += row[i] * t[k];
    }
  }
  n_ = m;
  c_ = std::move(r);
  minimize();
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
  if (n_ == 1) return CycNum(Rat(1 / c_[0]));
  const auto& fld = cyclotomic_field(n_);
  const int phi = fld.phi;
  // column j of the multiplication matrix is x * zeta^j
  std::vector<std::vector<Rat>> a(phi, std::vector<Rat>(phi + 1, Rat(0)));
  for (int j = 0; j < phi; ++j) {
    for (int k = 0; k < phi; ++k) {
      if (c_[k] == 0) continue;
      const auto& row = fld.power[j + k];
      for (int i = 0; i < phi; ++i) {
        if (row[i] != 0) a[i][j] += row[i] * c_[k];
      }
    }
  }
  a[0][phi] = 1;
  for (int col = 0; col < phi; ++col) {
    int piv = col;
    while (piv < phi && a[piv][col] == 0) ++piv;
    if (piv == phi) throw DivisionByZero("singular multiplication matrix");
    std::swap(a[piv], a[col]);
    const Rat inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (int r = 0; r < phi; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (int k = col; k <= phi; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<Rat> y(phi);
  for (int i = 0; i < phi; ++i) y[i] = a[i][phi];
  return from_basis(n_, std::move(y));
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inverse(); }

CycNum CycNum::galois(int a) const {
  if (n_ == 1) return *this;
  long aa = a % n_;
  if (aa < 0) aa += n_;
  if (std::gcd(aa, static_cast<long>(n_)) != 1) throw std::invalid_argument("galois: exponent not a unit");
  std::vector<Rat> c(n_, Rat(0));
  for (std::size_t k = 0; k < c_.size(); ++k) c[(k * aa) % n_] += c_[k];
  return from_powers(n_, c);
}

CycNum CycNum::conj() const { return galois(-1); }

CycNum CycNum::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CycNum base = *this;
  CycNum r(1L);
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

std::complex<double> CycNum::approx() const {
  std::complex<double> s = 0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const double ang = 2.0 * M_PI * static_cast<double>(k) / n_;
    s += c_[k].get_d() * std::polar(1.0, ang);
  }
  return s;
}

std::string CycNum::to_string() const {
  if (n_ == 1) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rat v = c_[k];
    if (!first) {
      os << (v < 0 ? " - " : " + ");
      v = abs(v);
    } else if (v < 0) {
      os << "-";
      v = -v;
    }
    first = false;
    if (k == 0) {
      os << v.get_str();
    } else {
      if (v != 1) os << v.get_str() << "*";
      os << "z" << n_;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace umbral
