#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "soblocks/characters.hpp"
#include "soblocks/mp.hpp"
#include "soblocks/weights.hpp"

namespace soblocks {

struct DimResult {
  long long dim = 0;
  double residual = 0;  // distance to the nearest integer plus imaginary residue
};

// Conformal-block dimensions for so(2rank+1) at a fixed level: a sum over the
// level set of character values times positive-root sine products,
//
//   { (level+g*)^rank |P/Q_long| }^{genus-1}
//     * sum_mu  prod_q Tr_{lambda_q}( e(mu+rho) )  prod_{alpha>0} |2 sin ...|^{2-2genus},
//
// with |P/Q_long| = 4 here, so the bracket is 4 k^rank, k = level + 2 rank - 1.
// Characters and sine products are cached per evaluation point; the final
// reduction always runs in a fixed order so results are identical across runs
// and thread counts.
class BlockEngine {
 public:
  BlockEngine(int rank, int level, long prec = kDefaultPrecision);

  int rank() const { return rank_; }
  int level() const { return level_; }
  int k() const { return k_; }
  long prec() const { return prec_; }
  const std::vector<BWeight>& weights() const { return weights_; }

  // Full sum over the level set, any genus >= 0.
  DimResult dim(int genus, const std::vector<BWeight>& lambdas, int jobs = 1) const;

  // Genus-0 sum over center orbits (requires an odd level 2s+1 and
  // tensor-class insertions): the integer-label family weighted by orbit
  // length and the zero-class family with all orbits of length 2.
  DimResult dim_orbit(const std::vector<BWeight>& lambdas, int jobs = 1) const;

 private:
  struct Family {
    std::vector<std::vector<int>> points;  // doubled evaluation coordinates
    std::vector<int> weight_of_point;      // orbit length multiplier
    std::vector<Real> phi;
    // memoized characters per weight; map nodes are stable, so references
    // stay valid while other threads insert
    mutable std::map<std::vector<int>, std::vector<Complex>> char_cache;
    mutable std::mutex cache_mutex;
  };

  const std::vector<Complex>& chars_for(const Family& fam, const std::vector<int>& two_l) const;
  DimResult reduce(const Family& fam, const std::vector<BWeight>& lambdas, int genus,
                   int jobs, const Family* second) const;

  int rank_, level_, k_;
  long prec_;
  CharContext ctx_;
  std::vector<BWeight> weights_;
  Family full_;            // one point per level-set weight
  bool orbit_ready_ = false;
  Family orbit_integer_;   // integer-entry orbit representatives
  Family orbit_zero_;      // zero-class orbit representatives
};

// Free-function forms build an engine per call and retry once at doubled
// precision when the integer rounding fails.
DimResult verlinde_dim(int rank, int level, int genus, const std::vector<BWeight>& lambdas,
                       long prec = kDefaultPrecision, int jobs = 1);
DimResult verlinde_dim_orbit(int r, int s, const std::vector<BWeight>& lambdas,
                             long prec = kDefaultPrecision, int jobs = 1);

long long fusion_coeff(int rank, int level, const BWeight& a, const BWeight& b, const BWeight& c,
                       long prec = kDefaultPrecision);

// Classical decomposition of V_lambda (x) V_{omega_1} for a tensor-class
// dominant weight: all diagrams obtained by adding or deleting one box,
// plus lambda itself when a_r != 0.  Multiplicity one throughout.
std::vector<BWeight> lr_rule(const BWeight& lambda);

// Contragredient weight; the longest Weyl element of so(2r+1) is -1, so this
// is the identity.  Kept as a seam for algebras where it is not.
inline BWeight dual_weight(const BWeight& w) { return w; }

struct FactorizationReport {
  long long lhs = 0;
  long long rhs = 0;
  bool pass = false;
};

// dim(lambdas) == sum_mu dim(first..split, mu) * dim(mu^dual, rest).
FactorizationReport factorization_check(int rank, int level, const std::vector<BWeight>& lambdas,
                                        int split, long prec = kDefaultPrecision);

// dim(lambdas + {0}) == dim(lambdas).
bool propagation_check(int rank, int level, const std::vector<BWeight>& lambdas,
                       long prec = kDefaultPrecision);

enum class DualityCase { even, odd, sigma0 };

struct DualityReport {
  long long lhs = 0;
  long long rhs = 0;
  bool pass = false;
};

// Dimension comparison between the rank-r side at level 2s+1 and the rank-s
// side at level 2r+1:
//   even:   (lambdas)            vs (transposes)
//   odd:    (lambdas, 0)         vs (transposes, sigma(0))
//   sigma0: (lambdas, sigma(0))  vs (transposes, sigma(0))
// The total box count must match the case parity.
DualityReport duality_check(int r, int s, const std::vector<YoungDiagram>& lambdas,
                            DualityCase c, long prec = kDefaultPrecision, int jobs = 1);

// Same check on caller-provided engines (lhs: rank r level 2s+1, rhs: rank s
// level 2r+1); used by bulk suites to share caches.
DualityReport duality_check(const BlockEngine& lhs_engine, const BlockEngine& rhs_engine,
                            const std::vector<YoungDiagram>& lambdas, DualityCase c,
                            int jobs = 1);

}  // namespace soblocks
