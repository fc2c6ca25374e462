#include "soblocks/verlinde.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace soblocks {

BlockEngine::BlockEngine(int rank, int level, long prec)
    : rank_(rank),
      level_(level),
      k_(level + 2 * rank - 1),
      prec_(prec),
      ctx_(rank, level + 2 * rank - 1, prec) {
  if (rank < 1 || level < 1) throw domain_error("block engine: rank and level must be positive");
  weights_ = level_set(rank, level, WeightClass::all);
  full_.points.reserve(weights_.size());
  for (const auto& w : weights_) {
    ULabel u = u_label(w, level);
    full_.points.push_back(u.two_u);
    full_.weight_of_point.push_back(1);
    full_.phi.push_back(phi_k(u.two_u, k_, prec));
  }
  if (level % 2 == 1 && level >= 3) {
    orbit_ready_ = true;
    int s = (level - 1) / 2;
    for (const auto& u : orbit_reps_integer(rank, s)) {
      orbit_integer_.points.push_back(u.eval_two_x());
      orbit_integer_.weight_of_point.push_back(orbit_of(u).length);
      orbit_integer_.phi.push_back(phi_k(u.eval_two_x(), k_, prec));
    }
    for (const auto& u : orbit_reps_zero(rank, s)) {
      orbit_zero_.points.push_back(u.eval_two_x());
      orbit_zero_.weight_of_point.push_back(2);
      orbit_zero_.phi.push_back(phi_k(u.eval_two_x(), k_, prec));
    }
  }
}

const std::vector<Complex>& BlockEngine::chars_for(const Family& fam,
                                                   const std::vector<int>& two_l) const {
  {
    std::lock_guard<std::mutex> lock(fam.cache_mutex);
    auto it = fam.char_cache.find(two_l);
    if (it != fam.char_cache.end()) return it->second;
  }
  std::vector<Complex> vals;
  vals.reserve(fam.points.size());
  for (const auto& pt : fam.points) vals.push_back(char_value(two_l, pt, ctx_));
  std::lock_guard<std::mutex> lock(fam.cache_mutex);
  return fam.char_cache.emplace(two_l, std::move(vals)).first->second;
}

DimResult BlockEngine::reduce(const Family& fam, const std::vector<BWeight>& lambdas, int genus,
                              int jobs, const Family* second) const {
  std::vector<const Family*> fams{&fam};
  if (second) fams.push_back(second);

  // Character tables are populated before any parallel work so the parallel
  // phase is read-only.
  std::vector<std::vector<const std::vector<Complex>*>> chars(fams.size());
  for (std::size_t f = 0; f < fams.size(); ++f)
    for (const auto& w : lambdas) chars[f].push_back(&chars_for(*fams[f], w.two_l()));

  std::size_t total = 0;
  for (auto* f : fams) total += f->points.size();
  std::vector<Complex> terms(total, Complex(prec_));

  auto compute = [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      std::size_t f = 0, idx = t;
      if (idx >= fams[0]->points.size()) {
        idx -= fams[0]->points.size();
        f = 1;
      }
      Complex prod(1, prec_);
      for (std::size_t q = 0; q < lambdas.size(); ++q)
        prod = prod * (*chars[f][q])[idx];
      Real factor = pow_si(fams[f]->phi[idx], 1 - genus);
      factor *= fams[f]->weight_of_point[idx];
      terms[t] = prod * factor;
    }
  };

  int nthreads = std::max(1, jobs);
  if (nthreads == 1 || total < 2) {
    compute(0, total);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (total + static_cast<std::size_t>(nthreads) - 1) /
                        static_cast<std::size_t>(nthreads);
    for (std::size_t b = 0; b < total; b += chunk)
      pool.emplace_back(compute, b, std::min(total, b + chunk));
    for (auto& th : pool) th.join();
  }

  // fixed-order reduction: label order within each family, families in order
  Complex sum(prec_);
  for (const auto& t : terms) sum += t;

  Real pref = pow_si(Real(4, prec_) * pow_si(Real(k_, prec_), rank_), genus - 1);
  sum.re *= pref;
  sum.im *= pref;

  if (!sum.is_finite()) throw precision_error("verlinde: non-finite sum");
  double resid_int = 0;
  long long n = sum.re.round_to_integer(&resid_int);
  DimResult out;
  out.residual = resid_int + std::abs(sum.im.to_double());
  out.dim = n;
  if (out.residual >= kRoundingTol)
    throw precision_error("verlinde: rounding residual " + std::to_string(out.residual));
  if (n < 0) throw precision_error("verlinde: negative dimension after rounding");
  return out;
}

DimResult BlockEngine::dim(int genus, const std::vector<BWeight>& lambdas, int jobs) const {
  if (genus < 0) throw domain_error("verlinde: genus must be nonnegative");
  for (const auto& w : lambdas) {
    if (w.rank != rank_) throw domain_error("verlinde: weight rank mismatch");
    if (w.level() > level_) throw domain_error("verlinde: weight above level");
  }
  return reduce(full_, lambdas, genus, jobs, nullptr);
}

DimResult BlockEngine::dim_orbit(const std::vector<BWeight>& lambdas, int jobs) const {
  if (!orbit_ready_)
    throw domain_error("verlinde: orbit sum needs an odd level 2s+1 with s >= 1");
  for (const auto& w : lambdas) {
    if (w.rank != rank_) throw domain_error("verlinde: weight rank mismatch");
    if (w.level() > level_) throw domain_error("verlinde: weight above level");
    if (!w.tensor_class()) throw domain_error("verlinde: orbit sum needs tensor-class weights");
  }
  return reduce(orbit_integer_, lambdas, 0, jobs, &orbit_zero_);
}

// --------------------------------------------------------------------------

template <typename F>
static DimResult with_precision_retry(long prec, F&& f) {
  try {
    return f(prec);
  } catch (const precision_error&) {
    return f(prec * 2);  // one retry at doubled precision
  }
}

DimResult verlinde_dim(int rank, int level, int genus, const std::vector<BWeight>& lambdas,
                       long prec, int jobs) {
  return with_precision_retry(prec, [&](long p) {
    return BlockEngine(rank, level, p).dim(genus, lambdas, jobs);
  });
}

DimResult verlinde_dim_orbit(int r, int s, const std::vector<BWeight>& lambdas, long prec,
                             int jobs) {
  return with_precision_retry(prec, [&](long p) {
    return BlockEngine(r, 2 * s + 1, p).dim_orbit(lambdas, jobs);
  });
}

long long fusion_coeff(int rank, int level, const BWeight& a, const BWeight& b, const BWeight& c,
                       long prec) {
  return verlinde_dim(rank, level, 0, {a, b, c}, prec).dim;
}

std::vector<BWeight> lr_rule(const BWeight& lambda) {
  if (!lambda.tensor_class()) throw domain_error("lr_rule: weight must be tensor class");
  const int r = lambda.rank;
  auto tl = lambda.two_l();
  std::vector<BWeight> out;
  auto try_push = [&](std::vector<int> cand) {
    for (int i = 0; i < r; ++i) {
      if (cand[static_cast<std::size_t>(i)] < 0) return;
      if (i + 1 < r && cand[static_cast<std::size_t>(i)] < cand[static_cast<std::size_t>(i + 1)])
        return;
    }
    out.push_back(weight_from_two_l(r, cand));
  };
  for (int i = 0; i < r; ++i) {
    auto up = tl;
    up[static_cast<std::size_t>(i)] += 2;
    try_push(up);
    auto down = tl;
    down[static_cast<std::size_t>(i)] -= 2;
    try_push(down);
  }
  if (tl[static_cast<std::size_t>(r - 1)] != 0) out.push_back(lambda);  // a_r != 0
  std::sort(out.begin(), out.end());
  return out;
}

FactorizationReport factorization_check(int rank, int level, const std::vector<BWeight>& lambdas,
                                        int split, long prec) {
  if (lambdas.size() < 2) throw domain_error("factorization: need at least two insertions");
  if (split < 1 || split >= static_cast<int>(lambdas.size()))
    throw domain_error("factorization: split must be interior");
  BlockEngine engine(rank, level, prec);
  FactorizationReport rep;
  rep.lhs = engine.dim(0, lambdas).dim;
  std::vector<BWeight> left(lambdas.begin(), lambdas.begin() + split);
  std::vector<BWeight> right(lambdas.begin() + split, lambdas.end());
  long long acc = 0;
  for (const auto& mu : engine.weights()) {
    auto l = left;
    l.push_back(mu);
    long long dl = engine.dim(0, l).dim;
    if (dl == 0) continue;
    std::vector<BWeight> rr;
    rr.push_back(dual_weight(mu));
    rr.insert(rr.end(), right.begin(), right.end());
    acc += dl * engine.dim(0, rr).dim;
  }
  rep.rhs = acc;
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

bool propagation_check(int rank, int level, const std::vector<BWeight>& lambdas, long prec) {
  BlockEngine engine(rank, level, prec);
  auto with_vac = lambdas;
  with_vac.push_back(zero_weight(rank));
  return engine.dim(0, lambdas).dim == engine.dim(0, with_vac).dim;
}

DualityReport duality_check(const BlockEngine& lhs_engine, const BlockEngine& rhs_engine,
                            const std::vector<YoungDiagram>& lambdas, DualityCase c, int jobs) {
  const int r = lhs_engine.rank(), s = rhs_engine.rank();
  if (lhs_engine.level() != 2 * s + 1 || rhs_engine.level() != 2 * r + 1)
    throw domain_error("duality: engines do not form a rank-level pair");
  int total = 0;
  for (const auto& y : lambdas) {
    if (!y.fits(r, s)) throw domain_error("duality: diagram outside the (r,s) box");
    total += y.size();
  }
  bool even = total % 2 == 0;
  if ((c == DualityCase::odd) == even)
    throw domain_error("duality: case parity does not match the total box count");

  std::vector<BWeight> lhs, rhs;
  for (const auto& y : lambdas) {
    lhs.push_back(young_to_weight(y, r));
    rhs.push_back(young_to_weight(transpose(y), s));
  }
  if (c == DualityCase::odd) {
    lhs.push_back(zero_weight(r));
    rhs.push_back(sigma(zero_weight(s), 2 * r + 1));
  } else if (c == DualityCase::sigma0) {
    lhs.push_back(sigma(zero_weight(r), 2 * s + 1));
    rhs.push_back(sigma(zero_weight(s), 2 * r + 1));
  }

  DualityReport rep;
  rep.lhs = lhs_engine.dim_orbit(lhs, jobs).dim;
  rep.rhs = rhs_engine.dim_orbit(rhs, jobs).dim;
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

DualityReport duality_check(int r, int s, const std::vector<YoungDiagram>& lambdas, DualityCase c,
                            long prec, int jobs) {
  auto run = [&](long p) {
    BlockEngine lhs_engine(r, 2 * s + 1, p);
    BlockEngine rhs_engine(s, 2 * r + 1, p);
    return duality_check(lhs_engine, rhs_engine, lambdas, c, jobs);
  };
  try {
    return run(prec);
  } catch (const precision_error&) {
    return run(prec * 2);
  }
}

}  // namespace soblocks
