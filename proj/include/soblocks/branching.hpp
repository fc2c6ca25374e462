#pragma once

#include <optional>
#include <vector>

#include "soblocks/common.hpp"
#include "soblocks/weights.hpp"

namespace soblocks {

// Embedding so(2r+1) + so(2s+1) inside so(N), N = (2r+1)(2s+1) = 2d+1.
// The factors act at levels (2s+1, 2r+1); the central charges match the
// ambient algebra at level 1, which is what keeps the branching finite.
struct EmbeddingData {
  int r = 0, s = 0;
  int big_n = 0;       // (2r+1)(2s+1)
  int d = 0;           // (N-1)/2
  int level_left = 0;  // 2s+1
  int level_right = 0; // 2r+1
  int gstar_left = 0, gstar_right = 0, gstar_big = 0;  // dual Coxeter numbers
};
EmbeddingData embedding_data(int r, int s);

// c(so(2r+1), level) = level * r(2r+1) / (2r - 1 + level), exact.
Rational central_charge(int rank, int level);

// Central-charge sum rule at level 1 for the embedding above.
bool conformal_check(int r, int s);

// Delta_w = (w, w + 2 rho) / (2 (g* + level)), exact, with (L_i, L_j) = d_ij
// and rho = sum (r - i + 1/2) L_i.
Rational trace_anomaly(const BWeight& w, int level);

// Delta_lambda(so(2r+1), 2s+1) + Delta_lambda^T(so(2s+1), 2r+1) = |lambda|/2.
bool delta_sum_check(const YoungDiagram& lambda, int r, int s);

// The two level-1 sources whose branching is computed here.
enum class Level1 { vacuum, vector };

enum class Variant { plain, sigma_left, sigma_right, sigma_both };
const char* to_string(Variant v);
const char* to_string(Level1 s);

struct BranchPair {
  BWeight left;          // rank r, level 2s+1
  BWeight right;         // rank s, level 2r+1
  Level1 source = Level1::vacuum;
  YoungDiagram generator;
  Variant variant = Variant::plain;
};

// Components of the level-1 branching generated by diagrams with at most
// `max_boxes` boxes.  Routing: the vacuum module receives (lambda, lambda^T)
// and (sigma lambda, sigma lambda^T) for even |lambda| and the two mixed
// variants for odd |lambda|; the vector module receives the complement.
// Every component has multiplicity one and appears exactly once.
std::vector<BranchPair> branch_set(int r, int s, Level1 source, int max_boxes);

// Membership test: identifies the generating diagram and variant when the
// pair is a branching component and routes it by the trace-anomaly parity.
std::optional<Level1> classify_pair(const BWeight& left, const BWeight& right, int r, int s);

// Index of each factor of the embedding, computed by embedding explicit
// generators as X (x) I and I (x) X into N x N matrices and comparing trace
// forms.  Equals (2s+1, 2r+1).
std::pair<int, int> dynkin_index(int r, int s);

}  // namespace soblocks
