#pragma once

#include <vector>

#include "soblocks/mp.hpp"
#include "soblocks/weights.hpp"

namespace soblocks {

// Evaluation machinery for Weyl characters of so(2r+1) at the points
// exp(2 pi i (mu+rho)/k).  All exponents that occur are quarter-integers,
// so every power of the base root of unity is a table entry
//   unit[n] = exp(i pi n / (2k)),  n modulo 4k.
class CharContext {
 public:
  CharContext(int rank, int k, long prec);

  int rank() const { return rank_; }
  int k() const { return k_; }
  long prec() const { return prec_; }

  const Complex& unit(long n) const {  // exp(i pi n / (2k))
    long m = n % (4L * k_);
    if (m < 0) m += 4L * k_;
    return table_[static_cast<std::size_t>(m)];
  }

  // sin(pi * two_v / (2k)), used by the positive-root products.
  Real sin_half(long two_v) const;

 private:
  int rank_;
  int k_;
  long prec_;
  std::vector<Complex> table_;
};

// Weyl character of the irreducible so(2r+1)-module with doubled
// L-coordinates two_lambda, evaluated at exp(2 pi i x / k) where x has the
// doubled coordinates two_point:
//
//   det( e(x_i m_j) - e(-x_i m_j) ) / det( e(x_i n_j) - e(-x_i n_j) ),
//
// e(t) = exp(2 pi i t / k), m_j = lambda^j + r-j+1/2, n_j = r-j+1/2.
// All products x_i m_j are quarter-integers, served by the unit table.
// The value is real up to rounding; the full complex number is returned so
// callers can inspect the imaginary residue.
Complex char_value(const std::vector<int>& two_lambda, const std::vector<int>& two_point,
                   const CharContext& ctx);

// Convenience wrapper: evaluate at a label's point (u for weight labels,
// u' - 1/2 for zero_class labels).
Complex char_value(const BWeight& lambda, const ULabel& u, const CharContext& ctx);

// Independent route: the character as an explicit sum over the weight system,
// with multiplicities from Freudenthal's recursion and each exponential
// evaluated directly with mpfr trigonometry.  Feasible for small modules.
Complex char_value_oracle(const std::vector<int>& two_lambda, const std::vector<int>& two_point,
                          int rank, int k, long prec);

// Dominant weights of V_lambda with their multiplicities (doubled L-coords).
struct DominantMult {
  std::vector<int> two_m;
  long long mult;
};
std::vector<DominantMult> dominant_weight_multiplicities(const std::vector<int>& two_lambda,
                                                         int rank);

// dim V_lambda computed from the weight-system table (orbit counting).
long long module_dimension(const std::vector<int>& two_lambda, int rank);

// dim V_lambda from the Weyl dimension formula, exact integer arithmetic.
long long weyl_dimension(const std::vector<int>& two_lambda, int rank);

// Positive-root sine product at a point with doubled coordinates two_v:
//   Phi_k(V) = prod_v (2 sin pi v/k)^2
//            * prod_{v<w} (2 sin pi (v-w)/k)^2 (2 sin pi (v+w)/k)^2 .
Real phi_k(const std::vector<int>& two_v, int k, long prec);

// Same quantity by direct enumeration of the positive roots of so(2r+1),
// each contributing |2 sin pi (x,alpha)/k|^2; validation twin for phi_k.
Real phi_k_from_roots(const std::vector<int>& two_point, int rank, int k, long prec);

// --------------------------------------------------------------------------
// identity checks
// --------------------------------------------------------------------------

// Index bookkeeping for a diagram inside the (r,s) box:
//   alpha^i = lambda^i + r + 1 - i          (descending, subset of [r+s]),
//   beta    = complement of alpha in [r+s]  (descending),
//   gamma^i = (r+s) - (beta^{s+1-i} - 1/2)  (descending, stored doubled);
// gamma recovers the (lambda^T + rho)-coordinates on the rank-s side.
// T = (r..1), T' = (s..1), T^c = complement of T in [r+s].
struct IndexSets {
  std::vector<int> alpha, beta;
  std::vector<int> two_gamma;
  std::vector<int> t_ref, t_prime, t_comp;
};
IndexSets index_sets(const YoungDiagram& lambda, int r, int s);

// Sign of the permutation of (1..n) obtained by concatenating two
// descending sequences (first, second).
int concat_sign(const std::vector<int>& first, const std::vector<int>& second);

// Block-minor determinant identity for a pair of integer matrices with
// diagonal product.  The harness pairs A with its adjugate, so D = det(A) I:
//   det(A)^s det(A_{U,T}) = sgn(U,U^c) sgn(T,T^c) det(A) det(B_{T^c,U^c}).
// U, T are given as subsets of {1..n} (ascending or descending, size r).
// Exact integer arithmetic throughout.
bool verify_minor_identity(const std::vector<std::vector<long long>>& a,
                           std::vector<int> u_rows, std::vector<int> t_cols);

struct CharDualityReport {
  double lhs = 0, rhs = 0;  // character values (real parts)
  int sign = 1;             // expected relating sign
  double residue = 0;       // |lhs - sign*rhs|
  bool sign_rule_ok = true;
  bool pass = false;
};

// Character duality across the orbit bijection: for lambda inside the
// (r,s) box and a label U of the rank-r side,
//   integer labels:   Tr_lambda(U)      = (-1)^{|lambda|} Tr_{lambda^T}(U^c),
//   zero_class:       Tr_lambda(U'-1/2) = Tr_{lambda^T}((r+s+1/2) - U'^c),
// together with the explicit sign computation
//   sgn([alpha],[beta]) = (-1)^{r(r-1)/2 + s(s-1)/2 + |lambda|}.
CharDualityReport verify_char_duality(const YoungDiagram& lambda, const ULabel& u, int r, int s,
                                      long prec, double tol = kIdentityTol);

// Center invariance: products of tensor-class characters agree at mu and
// at sigma(mu) whenever the total box count is even.
bool verify_center_trace(const std::vector<BWeight>& lambdas, const BWeight& mu, int rank,
                         int level, long prec, double tol = kIdentityTol);

// (2a)^{|V|} / Phi_2a(V) = 2 (2a)^{|V^c u {a}|} / Phi_2a(V^c u {a}),
// V a subset of {1..a-1}.
bool verify_trig1(const std::vector<int>& v_subset, int a, long prec, double tol = kIdentityTol);

// (2a)^{|V'|} / Phi_2a(V') = (2a)^{|V'^c|} / Phi_2a(a - V'^c),
// V' a subset of {1/2, ..., a-1/2} given by doubled (odd) entries.
bool verify_trig2(const std::vector<int>& two_vp, int a, long prec, double tol = kIdentityTol);

}  // namespace soblocks
