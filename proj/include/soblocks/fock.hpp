#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "soblocks/branching.hpp"
#include "soblocks/common.hpp"
#include "soblocks/weights.hpp"
#include "soblocks/young.hpp"

namespace soblocks {

// One fermion mode phi^{j,p}(a): j in [-r..r], p in [-s..s], a in Z+1/2
// stored doubled (two_a odd).  Modes with a < 0 create, a > 0 annihilate;
// there are no zero modes.
struct Mode {
  int j = 0, p = 0, two_a = 0;

  bool creation() const { return two_a < 0; }
  friend bool operator==(const Mode&, const Mode&) = default;
  // canonical order: by a ascending, then (j,p) lexicographically
  friend auto operator<=>(const Mode& x, const Mode& y) {
    if (auto c = x.two_a <=> y.two_a; c != 0) return c;
    if (auto c = x.j <=> y.j; c != 0) return c;
    return x.p <=> y.p;
  }
};

// Strictly increasing list of creation modes in the canonical order.
using Monomial = std::vector<Mode>;

int two_energy(const Monomial& m);  // sum of -2a over the modes

struct FockContext {
  int r = 0, s = 0;
  int max_two_energy = 24;  // resource bound on any produced monomial

  FockContext(int r_, int s_) : r(r_), s(s_) {}
  void check_mode(const Mode& m) const;
};

// Finite linear combination of wedge monomials with exact rational
// coefficients.  Immutable value semantics; zero coefficients never stored.
class FockVector {
 public:
  FockVector() = default;
  static FockVector vacuum();
  static FockVector monomial(Monomial m, Rational c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add(const Monomial& m, const Rational& c);
  friend FockVector operator+(const FockVector& a, const FockVector& b);
  friend FockVector operator-(const FockVector& a, const FockVector& b);
  friend FockVector operator*(const FockVector& a, const Rational& c);
  friend bool operator==(const FockVector&, const FockVector&) = default;

  // Homogeneity inspection; nullopt when mixed.
  std::optional<int> homogeneous_two_energy() const;
  std::optional<int> homogeneous_parity() const;  // wedge degree mod 2

 private:
  std::map<Monomial, Rational> terms_;
};

// phi^{j,p}(a) acting by wedge (a < 0) or contraction (a > 0), with signs
// from the canonical order.  Satisfies
//   {phi^{j,p}(a), phi^{k,q}(b)} = d_{j,-k} d_{p,-q} d_{a+b,0}.
FockVector clifford_apply(const Mode& m, const FockVector& v, const FockContext& ctx);

// Normal-ordered current B^{j,p}_{k,q}(m) = sum_{a+b=m} :phi^{j,p}(a) phi^{-k,-q}(b): .
struct CurrentOp {
  int j = 0, p = 0, k = 0, q = 0;
  int m = 0;
};
FockVector current_apply(const CurrentOp& op, const FockVector& v, const FockContext& ctx);

enum class Side { left, right };

// Embedded subalgebra currents: the rank-r factor acts by sum_p B^{i,p}_{j,p}(m),
// the rank-s factor by sum_j B^{j,p}_{j,q}(m).
FockVector subalgebra_apply(Side side, int upper, int lower, int m, const FockVector& v,
                            const FockContext& ctx);

// --------------------------------------------------------------------------
// so(N) elements in the E^{j,p}_{k,q} coordinate basis, for operator-identity
// checks (brackets, invariant form, central term).
// --------------------------------------------------------------------------

using SoElement = std::map<std::array<int, 4>, Rational>;  // (j,p,k,q) -> coeff of E

SoElement so_from_current(int j, int p, int k, int q);           // B^{j,p}_{k,q}
SoElement so_commutator(const SoElement& x, const SoElement& y);
Rational so_invariant_form(const SoElement& x, const SoElement& y);  // tr(xy)/2
FockVector so_current_apply(const SoElement& x, int m, const FockVector& v,
                            const FockContext& ctx);

// --------------------------------------------------------------------------
// highest-weight vectors
// --------------------------------------------------------------------------

// 0/1 matrix over [-r..r] x [-s..s] whose zeros are the wedge modes of a
// highest-weight vector.
struct ZeroOneGrid {
  int r = 0, s = 0;
  std::vector<int> e;

  ZeroOneGrid(int r_, int s_) : r(r_), s(s_), e(static_cast<std::size_t>((2 * r_ + 1) * (2 * s_ + 1)), 1) {}
  int& at(int j, int p) { return e[static_cast<std::size_t>((j + r) * (2 * s + 1) + (p + s))]; }
  int at(int j, int p) const { return e[static_cast<std::size_t>((j + r) * (2 * s + 1) + (p + s))]; }
};

ZeroOneGrid hwv_grid(const YoungDiagram& lambda, Variant variant, int r, int s);

// Wedge of phi^{j,p}(-1/2) over the zeros of the variant's grid, with
// coefficient +1 in the canonical mode order.
FockVector hwv_wedge(const YoungDiagram& lambda, Variant variant, const FockContext& ctx);

// Lowest-weight companion: wedge of phi^{-i,-j}(-1/2) over the boxes.
FockVector lowest_wedge(const YoungDiagram& lambda, const FockContext& ctx);

struct HwvReport {
  bool pass = false;
  std::vector<std::string> failures;
  int wedge_parity = 0;        // 0 even, 1 odd
  Rational energy;             // common energy degree
  Level1 source = Level1::vacuum;
};

// Checks that v is a joint highest-weight vector for the embedded pair of
// algebras with the expected weights: Cartan eigenvalues, annihilation by the
// simple raising operators at mode 0 and by the lowered-highest-root
// generators at mode 1 on both sides, parity against the branching source,
// and energy degree against the combined trace anomaly.
HwvReport verify_hwv(const FockVector& v, const BWeight& left, const BWeight& right,
                     const FockContext& ctx);

// Two-box ladder: repeatedly applies B^{a,b}_{-c,-d}(-1) along a sequence of
// box pairs, starting from the vacuum (even totals) or phi^{1,1}(-1/2)
// (odd totals).  The result is proportional to hwv_wedge(lambda, plain).
struct KacMoodyResult {
  FockVector vector;
  Rational scalar;          // result = scalar * hwv_wedge(lambda, plain)
  bool proportional = false;
};
KacMoodyResult kacmoody_build(const YoungDiagram& lambda,
                              const std::vector<std::array<int, 4>>& box_pairs,
                              const FockContext& ctx);

// Canonical two-box sequence for a diagram (row-major box order).
std::vector<std::array<int, 4>> box_pair_sequence(const YoungDiagram& lambda);

// B^{a,b}_{-c,-d}(1) annihilates the given vector (exact check).
bool verify_gauge_vanishing(int a, int b, int c, int d, const FockVector& phi3,
                            const FockContext& ctx);

// Invariant pairing on the degree-1/2 subspace:
//   Q(phi^{j,p}(-1/2), phi^{-k,-q}(-1/2)) = d_{j,k} d_{p,q}.
Rational q_pair(const FockVector& u, const FockVector& v);

std::string to_string(const Monomial& m);
std::string to_string(const FockVector& v);

}  // namespace soblocks
