#pragma once

#include <mpfr.h>

#include <string>
#include <utility>
#include <vector>

#include "soblocks/common.hpp"

namespace soblocks {

// Working precision in bits of mantissa.  The default leaves a wide margin:
// every identity checked here holds exactly in exact arithmetic, so the only
// error is accumulated rounding.
constexpr long kDefaultPrecision = 192;
constexpr double kIdentityTol = 1e-9;  // residue allowed in identity checks
constexpr double kRoundingTol = 1e-6;  // residue allowed when rounding to an integer

// Thin RAII wrapper around mpfr_t with explicit per-value precision.
// Binary operations produce results at the precision of the left operand;
// all values inside one computation are created at the same precision, so
// this never mixes precisions silently.
class Real {
 public:
  explicit Real(long prec = kDefaultPrecision) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(long value, long prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, value, MPFR_RNDN); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  long precision() const { return mpfr_get_prec(v_); }

  static Real pi(long prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static Real from_rational(const Rational& q, long prec);

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(long n) { mpfr_mul_si(v_, v_, n, MPFR_RNDN); return *this; }
  Real& operator/=(long n) { mpfr_div_si(v_, v_, n, MPFR_RNDN); return *this; }

  friend Real operator+(Real a, const Real& b) { a += b; return a; }
  friend Real operator-(Real a, const Real& b) { a -= b; return a; }
  friend Real operator*(Real a, const Real& b) { a *= b; return a; }
  friend Real operator/(Real a, const Real& b) { a /= b; return a; }
  friend Real operator*(Real a, long n) { a *= n; return a; }
  friend Real operator/(Real a, long n) { a /= n; return a; }
  friend Real operator-(const Real& a) {
    Real r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend Real sin(const Real& a) { Real r(a.precision()); mpfr_sin(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real cos(const Real& a) { Real r(a.precision()); mpfr_cos(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real abs(const Real& a) { Real r(a.precision()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real pow_si(const Real& a, long e) {
    Real r(a.precision());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }

  int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
  friend bool operator<(const Real& a, const Real& b) { return a.cmp(b) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return a.cmp(b) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return a.cmp(b) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return a.cmp(b) >= 0; }

  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Nearest integer together with the rounding residual |x - round(x)|.
  long long round_to_integer(double* residual) const;

  std::string str(int digits = 20) const;

 private:
  mpfr_t v_;
};

struct Complex {
  Real re, im;

  explicit Complex(long prec = kDefaultPrecision) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(long r, long prec) : re(r, prec), im(0, prec) {}

  long precision() const { return re.precision(); }

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  friend Complex operator+(Complex a, const Complex& b) { a += b; return a; }
  friend Complex operator-(Complex a, const Complex& b) { a -= b; return a; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Complex operator*(Complex a, const Real& s) { a.re *= s; a.im *= s; return a; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
  }
  friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }

  // 1-norm, cheap pivoting magnitude for LU elimination.
  Real mag1() const { return abs(re) + abs(im); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
};

// Determinant of a dense n x n complex matrix (row-major) by LU with partial
// pivoting.  A pivot below 2^-64 of the largest entry counts as singular:
// with allow_singular the determinant is reported as exactly zero (entries
// here are differences of roots of unity, whose determinants cannot be
// nonzero yet that small), otherwise a precision_error is raised.  Non-finite
// values always raise.
Complex determinant(std::vector<Complex> m, int n, bool allow_singular = false);

}  // namespace soblocks
