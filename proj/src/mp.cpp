#include "soblocks/mp.hpp"

#include <vector>

namespace soblocks {

Real Real::from_rational(const Rational& q, long prec) {
  Real num(prec), den(prec);
  // cpp_int -> decimal string -> mpfr; exact since mpfr parses integers exactly.
  std::string ns = boost::multiprecision::numerator(q).str();
  std::string ds = boost::multiprecision::denominator(q).str();
  mpfr_set_str(num.v_, ns.c_str(), 10, MPFR_RNDN);
  mpfr_set_str(den.v_, ds.c_str(), 10, MPFR_RNDN);
  num /= den;
  return num;
}

long long Real::round_to_integer(double* residual) const {
  if (!is_finite()) throw precision_error("round_to_integer: non-finite value");
  mpfr_t r;
  mpfr_init2(r, mpfr_get_prec(v_));
  mpfr_rint(r, v_, MPFR_RNDN);
  if (!mpfr_fits_slong_p(r, MPFR_RNDN)) {
    mpfr_clear(r);
    throw precision_error("round_to_integer: value out of integer range");
  }
  long n = mpfr_get_si(r, MPFR_RNDN);
  mpfr_sub(r, v_, r, MPFR_RNDN);
  mpfr_abs(r, r, MPFR_RNDN);
  if (residual) *residual = mpfr_get_d(r, MPFR_RNDN);
  mpfr_clear(r);
  return n;
}

std::string Real::str(int digits) const {
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v_);
  return std::string(buf);
}

Complex determinant(std::vector<Complex> m, int n, bool allow_singular) {
  if (n == 0) return Complex(1, kDefaultPrecision);
  long prec = m[0].precision();
  Real scale(0, prec);
  for (auto& e : m) {
    if (!e.is_finite()) throw precision_error("determinant: non-finite entry");
    Real a = e.mag1();
    if (a > scale) scale = a;
  }
  // Singularity threshold: entries of a genuinely invertible evaluation
  // matrix here are O(1); anything this small is a bug signal upstream.
  Real tiny = scale * Real::from_rational(Rational(1, BigInt(1) << 64), prec);

  int sign = 1;
  auto at = [&](int i, int j) -> Complex& { return m[static_cast<std::size_t>(i * n + j)]; };
  Complex det(1, prec);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    Real best = at(col, col).mag1();
    for (int i = col + 1; i < n; ++i) {
      Real c = at(i, col).mag1();
      if (c > best) {
        best = c;
        piv = i;
      }
    }
    if (!(best > tiny)) {
      if (allow_singular) return Complex(0, prec);
      throw precision_error("determinant: numerically singular matrix");
    }
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(col, j));
      sign = -sign;
    }
    det = det * at(col, col);
    for (int i = col + 1; i < n; ++i) {
      Complex f = at(i, col) / at(col, col);
      for (int j = col + 1; j < n; ++j) at(i, j) -= f * at(col, j);
    }
  }
  if (sign < 0) det = -det;
  if (!det.is_finite()) throw precision_error("determinant: non-finite result");
  return det;
}

}  // namespace soblocks
