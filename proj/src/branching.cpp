#include "soblocks/branching.hpp"

#include <algorithm>
#include <set>

namespace soblocks {

EmbeddingData embedding_data(int r, int s) {
  if (r < 1 || s < 1) throw domain_error("embedding: ranks must be positive");
  EmbeddingData e;
  e.r = r;
  e.s = s;
  e.big_n = (2 * r + 1) * (2 * s + 1);
  e.d = (e.big_n - 1) / 2;
  e.level_left = 2 * s + 1;
  e.level_right = 2 * r + 1;
  e.gstar_left = 2 * r - 1;
  e.gstar_right = 2 * s - 1;
  e.gstar_big = e.big_n - 2;
  return e;
}

Rational central_charge(int rank, int level) {
  if (rank < 1 || level < 0) throw domain_error("central_charge: bad parameters");
  if (level == 0) return Rational(0);
  long long dim = static_cast<long long>(rank) * (2 * rank + 1);
  return Rational(static_cast<long long>(level) * dim, 2 * rank - 1 + level);
}

bool conformal_check(int r, int s) {
  EmbeddingData e = embedding_data(r, s);
  Rational lhs = central_charge(r, e.level_left) + central_charge(s, e.level_right);
  Rational rhs = central_charge(e.d, 1);
  return lhs == rhs;
}

Rational trace_anomaly(const BWeight& w, int level) {
  if (w.level() > level) throw domain_error("trace_anomaly: weight above level");
  auto tl = w.two_l();
  const int r = w.rank;
  // (w, w + 2 rho) in quarter units: sum two_l_i (two_l_i + 2(2(r-i)-1... ))
  BigInt quad = 0;
  for (int i = 0; i < r; ++i) {
    long long tli = tl[static_cast<std::size_t>(i)];
    long long two_rho = 2 * (r - 1 - i) + 1;
    quad += BigInt(tli) * (tli + 2 * two_rho);
  }
  // Delta = quad/4 / (2 (g* + level))
  return Rational(quad, BigInt(8) * (2 * r - 1 + level));
}

bool delta_sum_check(const YoungDiagram& lambda, int r, int s) {
  if (!lambda.fits(r, s)) throw domain_error("delta_sum_check: diagram outside the box");
  Rational lhs = trace_anomaly(young_to_weight(lambda, r), 2 * s + 1) +
                 trace_anomaly(young_to_weight(transpose(lambda), s), 2 * r + 1);
  return lhs == Rational(lambda.size(), 2);
}

const char* to_string(Variant v) {
  switch (v) {
    case Variant::plain: return "plain";
    case Variant::sigma_left: return "sigmaL";
    case Variant::sigma_right: return "sigmaR";
    case Variant::sigma_both: return "sigmaLR";
  }
  return "?";
}

const char* to_string(Level1 s) {
  return s == Level1::vacuum ? "vacuum" : "vector";
}

std::vector<BranchPair> branch_set(int r, int s, Level1 source, int max_boxes) {
  if (max_boxes < 0) throw domain_error("branch_set: negative bound");
  const int ll = 2 * s + 1, lr = 2 * r + 1;
  std::vector<BranchPair> out;
  std::set<std::pair<BWeight, BWeight>> seen;
  for (int n = 0; n <= std::min(max_boxes, r * s); ++n) {
    for (const auto& y : diagrams_of_size(r, s, n)) {
      BWeight wl = young_to_weight(y, r);
      BWeight wr = young_to_weight(transpose(y), s);
      bool even = y.size() % 2 == 0;
      // even boxes: untwisted and doubly twisted variants sit over the vacuum
      bool plain_in_vacuum = even;
      struct Row {
        Variant v;
        bool in_vacuum;
      };
      const Row rows[4] = {
          {Variant::plain, plain_in_vacuum},
          {Variant::sigma_both, plain_in_vacuum},
          {Variant::sigma_left, !plain_in_vacuum},
          {Variant::sigma_right, !plain_in_vacuum},
      };
      for (const Row& row : rows) {
        bool in_vacuum = row.in_vacuum;
        if ((source == Level1::vacuum) != in_vacuum) continue;
        BranchPair bp;
        bp.left = (row.v == Variant::sigma_left || row.v == Variant::sigma_both)
                      ? sigma(wl, ll)
                      : wl;
        bp.right = (row.v == Variant::sigma_right || row.v == Variant::sigma_both)
                       ? sigma(wr, lr)
                       : wr;
        bp.source = source;
        bp.generator = y;
        bp.variant = row.v;
        if (!seen.insert({bp.left, bp.right}).second) continue;  // multiplicity one
        out.push_back(std::move(bp));
      }
    }
  }
  return out;
}

std::optional<Level1> classify_pair(const BWeight& left, const BWeight& right, int r, int s) {
  if (left.rank != r || right.rank != s) throw domain_error("classify_pair: rank mismatch");
  const int ll = 2 * s + 1, lr = 2 * r + 1;
  if (left.level() > ll || right.level() > lr) return std::nullopt;
  if (!left.tensor_class() || !right.tensor_class()) return std::nullopt;

  // undo the center twists: a sigma-image has first L-coordinate > s (resp. r)
  auto untwist = [](const BWeight& w, int level, int cols) {
    auto tl = w.two_l();
    bool twisted = tl[0] > 2 * cols;
    return std::pair<BWeight, bool>(twisted ? sigma(w, level) : w, twisted);
  };
  auto [base_l, tl_twist] = untwist(left, ll, s);
  auto [base_r, tr_twist] = untwist(right, lr, r);
  YoungDiagram yl, yr;
  try {
    yl = weight_to_young(base_l);
    yr = weight_to_young(base_r);
  } catch (const domain_error&) {
    return std::nullopt;
  }
  if (!yl.fits(r, s) || transpose(yl) != yr) return std::nullopt;

  // route by the combined trace anomaly mod 1
  Rational d = trace_anomaly(left, ll) + trace_anomaly(right, lr);
  Rational twice = d * 2;
  if (boost::multiprecision::denominator(twice) != 1) return std::nullopt;
  BigInt t = boost::multiprecision::numerator(twice);
  return (t % 2 == 0) ? Level1::vacuum : Level1::vector;
}

std::pair<int, int> dynkin_index(int r, int s) {
  if (r < 1 || s < 1) throw domain_error("dynkin_index: ranks must be positive");
  // X = E_{1,2} - E_{2,1} in the defining representation, embedded as
  // X (x) I (resp. I (x) X); the index is tr((X (x) I)^2) / tr(X^2).
  auto tr_x2 = [](int n) {
    // tr(X^2) for the antisymmetric generator above inside n x n matrices
    std::vector<std::vector<int>> x(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), 0));
    x[0][1] = 1;
    x[1][0] = -1;
    long long tr = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        tr += static_cast<long long>(x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
              x[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return tr;
  };
  int nl = 2 * r + 1, nr = 2 * s + 1, nn = nl * nr;
  // Kronecker products with the identity, traced explicitly.
  auto tr_embedded = [&](int nsmall, int nother, bool left_factor) {
    std::vector<std::vector<long long>> big(static_cast<std::size_t>(nn),
                                            std::vector<long long>(static_cast<std::size_t>(nn), 0));
    for (int a = 0; a < nsmall; ++a)
      for (int b = 0; b < nsmall; ++b) {
        int v = (a == 0 && b == 1) ? 1 : (a == 1 && b == 0 ? -1 : 0);
        if (v == 0) continue;
        for (int c = 0; c < nother; ++c) {
          int row = left_factor ? a * nother + c : c * nsmall + a;
          int col = left_factor ? b * nother + c : c * nsmall + b;
          big[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
        }
      }
    long long tr = 0;
    for (int i = 0; i < nn; ++i)
      for (int j = 0; j < nn; ++j)
        tr += big[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
              big[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return tr;
  };
  long long base_l = tr_x2(nl), base_r = tr_x2(nr);
  long long emb_l = tr_embedded(nl, nr, true);
  long long emb_r = tr_embedded(nr, nl, false);
  if (emb_l % base_l != 0 || emb_r % base_r != 0)
    throw precision_error("dynkin_index: non-integral ratio");
  return {static_cast<int>(emb_l / base_l), static_cast<int>(emb_r / base_r)};
}

}  // namespace soblocks
