#pragma once

#include <optional>
#include <string>
#include <vector>

#include "soblocks/common.hpp"
#include "soblocks/young.hpp"

namespace soblocks {

// Dominant weight of so(2r+1) in fundamental-weight coordinates a_1..a_r.
//
// The orthogonal (L-)coordinates are lambda^i = a_i + ... + a_{r-1} + a_r/2;
// they are stored doubled so spin weights stay integral.  A weight is
// "tensor class" (lifts to SO(2r+1)) exactly when a_r is even, equivalently
// when all L-coordinates are integers; those weights are parametrized by
// Young diagrams with at most r rows via lambda^i = row length.
struct BWeight {
  int rank = 0;
  std::vector<int> fund;  // a_1..a_r, all >= 0

  BWeight() = default;
  BWeight(int r, std::vector<int> a);

  std::vector<int> two_l() const;  // doubled L-coordinates, size rank
  bool tensor_class() const { return fund.back() % 2 == 0; }
  // Pairing with the highest root; bounds the admissible level.
  int level() const;

  friend bool operator==(const BWeight&, const BWeight&) = default;
  friend auto operator<=>(const BWeight& a, const BWeight& b) {
    if (auto c = a.rank <=> b.rank; c != 0) return c;
    return a.fund <=> b.fund;
  }
};

BWeight zero_weight(int rank);
BWeight fundamental_weight(int rank, int i);  // omega_i, 1 <= i <= rank
BWeight weight_from_two_l(int rank, const std::vector<int>& two_l);

BWeight young_to_weight(const YoungDiagram& y, int rank);
YoungDiagram weight_to_young(const BWeight& w);  // tensor class only

// Action of the nontrivial center element of Spin(2r+1) on level-`level`
// weights: a_1 is replaced by level - level(w) + a_1.  An involution.
BWeight sigma(const BWeight& w, int level);

enum class WeightClass { all, tensor };

// Dominant weights with level() <= level, ordered lexicographically on the
// fundamental coordinates.  No duplicates.
std::vector<BWeight> level_set(int rank, int level, WeightClass cls);

// Ranks below 3 are admitted for smoke tests but outside the validated range.
bool small_rank(int rank);

// ---------------------------------------------------------------------------
// u-labels
//
// For a weight w of level <= level, the label stores the L-coordinates of
// w + rho (kind::weight): u_i = lambda^i + r - i + 1/2, strictly decreasing
// positive half-integers, all in the same integrality class.  Tensor-class
// weights admit a second, all-integer coordinate system (kind::zero_class):
// w + rho = sum (u'_i - 1/2) L_i.  Entries are stored doubled.
// ---------------------------------------------------------------------------

enum class LabelKind { weight, zero_class };

struct ULabel {
  int rank = 0;
  int level = 0;
  LabelKind kind = LabelKind::weight;
  std::vector<int> two_u;  // doubled entries, strictly decreasing, positive

  int k() const { return level + 2 * rank - 1; }
  bool integer_entries() const;

  // Evaluation coordinates (doubled): the label's own entries for
  // kind::weight, u'_i - 1/2 for kind::zero_class.
  std::vector<int> eval_two_x() const;

  friend bool operator==(const ULabel&, const ULabel&) = default;
};

ULabel u_label(const BWeight& w, int level);
ULabel u0_label(const BWeight& w, int level);  // tensor-class weights only
BWeight from_u_label(const ULabel& u);         // inverts either kind

// Center action on labels: u_1 <-> k - u_1 (weight kind),
// u'_1 <-> k + 1 - u'_1 (zero_class kind).
ULabel sigma(const ULabel& u);

struct OrbitClass {
  ULabel rep;
  int length = 0;  // 1 or 2
};
OrbitClass orbit_of(const ULabel& u);

// Orbit representatives for the level-(2s+1) set of so(2r+1):
//  - integer-entry labels (kind::weight): the r-subsets of [r+s];
//  - zero_class labels: the r-subsets of [r+s] read as u'-coordinates.
// Deterministic order (subsets enumerated in ascending combination order).
std::vector<ULabel> orbit_reps_integer(int r, int s);
std::vector<ULabel> orbit_reps_zero(int r, int s);

// Orbit bijection for integer-entry labels: U in [r+s], |U| = r, maps to the
// complement of U in [r+s], reread as a label for rank s at level 2r+1.
ULabel orbit_bijection_plus(const ULabel& u);

// Orbit bijection for zero_class labels: U' maps to (r+s+1) - complement(U').
ULabel orbit_bijection_zero(const ULabel& u);

std::string to_string(const BWeight& w);
std::string to_string(const ULabel& u);

}  // namespace soblocks
