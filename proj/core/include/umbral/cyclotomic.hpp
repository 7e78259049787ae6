#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace umbral {

using Int = mpz_class;
using Rat = mpq_class;

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

/// Static data for Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi-1).
/// Tables are built once per conductor and shared by all threads.
struct CyclotomicField {
  int n = 1;
  int phi = 1;
  std::vector<long> modulus;                 // monic n-th cyclotomic polynomial, degree phi
  std::vector<std::vector<long>> power;      // power[j] = zeta^j reduced, 0 <= j < 2n
  long power_norm = 1;                       // max_j sum_i |power[j][i]|
};

/// Conductors congruent to 2 mod 4 are replaced by n/2 (same field).
int canonical_conductor(int n);
const CyclotomicField& cyclotomic_field(int n);
int euler_phi(int n);

/// Subfield test for Q(zeta_d) inside Q(zeta_n) on an integer coefficient
/// block. On success `out` holds the coordinates in the smaller field.
bool project_to_subfield(int n, int d, const Int* x, std::vector<Int>& out);
bool project_to_subfield(int n, int d, const std::vector<Rat>& x, std::vector<Rat>& out);

/// Coordinates of an element of Q(zeta_d) re-expressed in Q(zeta_m), d | m.
void lift_coeffs(int d, int m, const Int* x, Int* out);

/// Element of a cyclotomic field, stored in the smallest conductor that
/// contains it.
class CycNum {
 public:
  CycNum();
  CycNum(long v);  // NOLINT(google-explicit-constructor)
  CycNum(const Int& v);  // NOLINT
  CycNum(const Rat& v);  // NOLINT

  /// e^{2 pi i t}.
  static CycNum root_of_unity(const Rat& turn);
  /// sum_k c[k] zeta_n^k for arbitrary length c.
  static CycNum from_powers(int n, const std::vector<Rat>& c);
  /// Already-reduced coordinates in Q(zeta_n); n must be canonical.
  static CycNum from_basis(int n, std::vector<Rat> c);

  int conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  std::vector<Rat> coeffs_in(int m) const;

  bool is_zero() const;
  bool is_one() const;
  std::optional<Rat> to_rational() const;
  std::optional<Int> to_integer() const;

  CycNum inverse() const;
  CycNum conj() const;
  CycNum galois(int a) const;

  std::complex<double> approx() const;
  std::string to_string() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  CycNum operator-() const;
  friend bool operator==(const CycNum& a, const CycNum& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  CycNum pow(long k) const;

 private:
  void minimize();

  int n_ = 1;
  std::vector<Rat> c_;
};

/// Convenience: e^{2 pi i t}.
inline CycNum turn(const Rat& t) { return CycNum::root_of_unity(t); }
inline CycNum imag_unit() { return CycNum::root_of_unity(Rat(1, 4)); }

/// Canonical p/q.
inline Rat ratio(long p, long q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

Rat frac_part(const Rat& t);
Int floor_rat(const Rat& t);
Int ceil_rat(const Rat& t);
Rat rat_gcd(const Rat& a, const Rat& b);
std::string rat_string(const Rat& r);
int lcm_int(int a, int b);

}  // namespace umbral
