#include "soblocks/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace soblocks {

CharContext::CharContext(int rank, int k, long prec) : rank_(rank), k_(k), prec_(prec) {
  if (rank < 1 || k < 2) throw domain_error("char context: bad parameters");
  if (prec < 24) throw domain_error("char context: precision too small");
  long n = 4L * k;
  table_.reserve(static_cast<std::size_t>(n));
  Real pi = Real::pi(prec);
  for (long i = 0; i < n; ++i) {
    Real theta = pi * i / (2L * k);
    table_.emplace_back(cos(theta), sin(theta));
  }
}

Real CharContext::sin_half(long two_v) const {
  Real theta = Real::pi(prec_) * two_v / (2L * k_);
  return sin(theta);
}

static std::vector<int> rho_doubled(int rank) {
  std::vector<int> two_rho(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) two_rho[static_cast<std::size_t>(i)] = 2 * (rank - 1 - i) + 1;
  return two_rho;
}

Complex char_value(const std::vector<int>& two_lambda, const std::vector<int>& two_point,
                   const CharContext& ctx) {
  const int r = ctx.rank();
  if (static_cast<int>(two_lambda.size()) != r || static_cast<int>(two_point.size()) != r)
    throw domain_error("char_value: coordinate size mismatch");
  std::vector<int> two_rho = rho_doubled(r);
  std::vector<Complex> num, den;
  num.reserve(static_cast<std::size_t>(r * r));
  den.reserve(static_cast<std::size_t>(r * r));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      long x = two_point[static_cast<std::size_t>(i)];
      long m = two_lambda[static_cast<std::size_t>(j)] + two_rho[static_cast<std::size_t>(j)];
      long n = two_rho[static_cast<std::size_t>(j)];
      num.push_back(ctx.unit(x * m) - ctx.unit(-x * m));
      den.push_back(ctx.unit(x * n) - ctx.unit(-x * n));
    }
  }
  Complex d = determinant(std::move(den), r);              // Weyl denominator: never singular
  Complex t = determinant(std::move(num), r, /*allow_singular=*/true);
  return t / d;
}

Complex char_value(const BWeight& lambda, const ULabel& u, const CharContext& ctx) {
  if (lambda.rank != u.rank || lambda.rank != ctx.rank())
    throw domain_error("char_value: rank mismatch");
  if (u.k() != ctx.k()) throw domain_error("char_value: level mismatch with context");
  return char_value(lambda.two_l(), u.eval_two_x(), ctx);
}

// --------------------------------------------------------------------------
// Weight-system route (Freudenthal)
// --------------------------------------------------------------------------

namespace {

// doubled positive roots of so(2r+1) in L-coordinates
std::vector<std::vector<int>> positive_roots_doubled(int rank) {
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> a(static_cast<std::size_t>(rank), 0);
    a[static_cast<std::size_t>(i)] = 2;  // L_i
    roots.push_back(a);
  }
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      std::vector<int> a(static_cast<std::size_t>(rank), 0);
      a[static_cast<std::size_t>(i)] = 2;
      a[static_cast<std::size_t>(j)] = -2;  // L_i - L_j
      roots.push_back(a);
      a[static_cast<std::size_t>(j)] = 2;  // L_i + L_j
      roots.push_back(a);
    }
  }
  return roots;
}

long long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

// partial sums of (two_hi - two_lo)/2 must all be nonnegative integers
bool below(const std::vector<int>& two_lo, const std::vector<int>& two_hi) {
  long long acc = 0;
  for (std::size_t i = 0; i < two_lo.size(); ++i) {
    int d = two_hi[i] - two_lo[i];
    if (d % 2 != 0) return false;
    acc += d;
    if (acc < 0) return false;
  }
  return true;
}

void validate_dominant(const std::vector<int>& two_l, int rank) {
  if (static_cast<int>(two_l.size()) != rank) throw domain_error("dominant weight: size mismatch");
  int parity = ((two_l[0] % 2) + 2) % 2;
  for (std::size_t i = 0; i < two_l.size(); ++i) {
    if (two_l[i] < 0) throw domain_error("dominant weight: negative coordinate");
    if (((two_l[i] % 2) + 2) % 2 != parity) throw domain_error("dominant weight: mixed parity");
    if (i + 1 < two_l.size() && two_l[i] < two_l[i + 1])
      throw domain_error("dominant weight: coordinates not decreasing");
  }
}

}  // namespace

std::vector<DominantMult> dominant_weight_multiplicities(const std::vector<int>& two_lambda,
                                                         int rank) {
  validate_dominant(two_lambda, rank);
  if (two_lambda[0] > 24 || rank > 8)
    throw resource_error("weight system too large for the oracle route");

  // Dominant candidates mu <= lambda: weakly decreasing, same parity,
  // partial sums of lambda - mu nonnegative.
  std::vector<std::vector<int>> cands;
  std::vector<int> cur(static_cast<std::size_t>(rank));
  int parity = ((two_lambda[0] % 2) + 2) % 2;
  std::function<void(int, int)> gen = [&](int pos, int cap) {
    if (pos == rank) {
      if (below(cur, two_lambda)) cands.push_back(cur);
      return;
    }
    for (int v = cap - ((cap - parity) % 2); v >= parity; v -= 2) {
      cur[static_cast<std::size_t>(pos)] = v;
      gen(pos + 1, v);
    }
  };
  gen(0, two_lambda[0]);
  if (cands.size() > 200000) throw resource_error("weight system too large for the oracle route");

  std::vector<int> two_rho = rho_doubled(rank);
  auto plus = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
  };
  auto height2 = [&](const std::vector<int>& two_m) {
    // twice the sum of simple-root coefficients of lambda - mu
    long long acc = 0, tot = 0;
    for (std::size_t i = 0; i < two_m.size(); ++i) {
      acc += two_lambda[i] - two_m[i];
      tot += acc;
    }
    return tot;
  };
  std::sort(cands.begin(), cands.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              long long ha = height2(a), hb = height2(b);
              if (ha != hb) return ha < hb;
              return a > b;
            });

  auto roots = positive_roots_doubled(rank);
  std::map<std::vector<int>, long long> mult;
  std::vector<int> two_lr = plus(two_lambda, two_rho);
  long long lr2 = dot(two_lr, two_lr);

  std::vector<DominantMult> out;
  for (const auto& two_m : cands) {
    if (two_m == two_lambda) {
      mult[two_m] = 1;
      out.push_back({two_m, 1});
      continue;
    }
    long long num = 0;
    for (const auto& alpha : roots) {
      std::vector<int> nu = two_m;
      while (true) {
        for (std::size_t i = 0; i < nu.size(); ++i) nu[i] += alpha[i];
        if (!below(nu, two_lambda)) break;
        // multiplicity is Weyl invariant: look up the dominant representative
        std::vector<int> dom(nu.size());
        for (std::size_t i = 0; i < nu.size(); ++i) dom[i] = std::abs(nu[i]);
        std::sort(dom.begin(), dom.end(), std::greater<int>());
        auto it = mult.find(dom);
        if (it != mult.end() && it->second != 0) num += it->second * dot(nu, alpha);
      }
    }
    std::vector<int> two_mr = plus(two_m, two_rho);
    long long den = lr2 - dot(two_mr, two_mr);
    if (den <= 0) throw precision_error("freudenthal: nonpositive denominator");
    long long twice = 2 * num;
    if (twice % den != 0) throw precision_error("freudenthal: non-integral multiplicity");
    long long m = twice / den;
    mult[two_m] = m;
    if (m != 0) out.push_back({two_m, m});
  }
  return out;
}

namespace {

long long orbit_size(const std::vector<int>& two_m) {
  // distinct signed permutations of the coordinate multiset
  long long perms = 1;
  int n = static_cast<int>(two_m.size());
  for (int i = 2; i <= n; ++i) perms *= i;
  int i = 0;
  int nonzero = 0;
  std::vector<int> sorted = two_m;
  std::sort(sorted.begin(), sorted.end());
  while (i < n) {
    int j = i;
    while (j < n && sorted[static_cast<std::size_t>(j)] == sorted[static_cast<std::size_t>(i)]) ++j;
    long long f = 1;
    for (int t = 2; t <= j - i; ++t) f *= t;
    perms /= f;
    i = j;
  }
  for (int v : two_m)
    if (v != 0) ++nonzero;
  return perms << nonzero;
}

}  // namespace

long long module_dimension(const std::vector<int>& two_lambda, int rank) {
  long long d = 0;
  for (const auto& wm : dominant_weight_multiplicities(two_lambda, rank))
    d += wm.mult * orbit_size(wm.two_m);
  return d;
}

long long weyl_dimension(const std::vector<int>& two_lambda, int rank) {
  validate_dominant(two_lambda, rank);
  std::vector<int> two_rho = rho_doubled(rank);
  std::vector<int> two_lr(two_lambda.size());
  for (std::size_t i = 0; i < two_lr.size(); ++i) two_lr[i] = two_lambda[i] + two_rho[i];
  Rational prod(1);
  for (const auto& alpha : positive_roots_doubled(rank)) {
    long long n = dot(two_lr, alpha);
    long long d = dot(two_rho, alpha);
    prod *= Rational(n, d);
  }
  if (boost::multiprecision::denominator(prod) != 1)
    throw precision_error("weyl_dimension: non-integral result");
  return static_cast<long long>(boost::multiprecision::numerator(prod));
}

Complex char_value_oracle(const std::vector<int>& two_lambda, const std::vector<int>& two_point,
                          int rank, int k, long prec) {
  if (static_cast<int>(two_point.size()) != rank)
    throw domain_error("char_value_oracle: point size mismatch");
  auto table = dominant_weight_multiplicities(two_lambda, rank);
  Real pi = Real::pi(prec);
  Complex sum(prec);
  for (const auto& wm : table) {
    // full Weyl orbit: distinct permutations x sign choices on nonzero coords
    std::vector<int> base = wm.two_m;
    std::sort(base.begin(), base.end());
    do {
      std::vector<std::size_t> nz;
      for (std::size_t i = 0; i < base.size(); ++i)
        if (base[i] != 0) nz.push_back(i);
      for (std::uint64_t mask = 0; mask < (1ULL << nz.size()); ++mask) {
        long long n = 0;
        for (std::size_t i = 0; i < base.size(); ++i) {
          long long v = base[i];
          n += static_cast<long long>(two_point[i]) * v;
        }
        // apply sign flips
        long long flip = 0;
        for (std::size_t b = 0; b < nz.size(); ++b)
          if (mask & (1ULL << b))
            flip += 2LL * static_cast<long long>(two_point[nz[b]]) * base[nz[b]];
        n -= flip;
        Real theta = pi * n / (2L * k);
        Complex term(cos(theta), sin(theta));
        Real m(wm.mult, prec);
        sum += term * m;
      }
    } while (std::next_permutation(base.begin(), base.end()));
  }
  return sum;
}

// --------------------------------------------------------------------------
// sine products
// --------------------------------------------------------------------------

Real phi_k(const std::vector<int>& two_v, int k, long prec) {
  for (std::size_t i = 0; i < two_v.size(); ++i) {
    if (two_v[i] <= 0) throw domain_error("phi_k: entries must be positive");
    for (std::size_t j = i + 1; j < two_v.size(); ++j)
      if (two_v[i] == two_v[j]) throw domain_error("phi_k: entries must be distinct");
  }
  Real pi = Real::pi(prec);
  auto s2 = [&](long two_arg) {
    Real x = sin(pi * two_arg / (2L * k)) * 2;
    return x * x;
  };
  Real prod(1, prec);
  for (std::size_t i = 0; i < two_v.size(); ++i) {
    prod *= s2(two_v[i]);
    for (std::size_t j = i + 1; j < two_v.size(); ++j) {
      prod *= s2(std::abs(two_v[i] - two_v[j]));
      prod *= s2(two_v[i] + two_v[j]);
    }
  }
  return prod;
}

Real phi_k_from_roots(const std::vector<int>& two_point, int rank, int k, long prec) {
  Real pi = Real::pi(prec);
  Real prod(1, prec);
  for (const auto& alpha : positive_roots_doubled(rank)) {
    long long two_pairing = dot(two_point, alpha) / 2;  // doubled (x, alpha)
    Real x = sin(pi * two_pairing / (2L * k)) * 2;
    prod *= x * x;
  }
  return prod;
}

// --------------------------------------------------------------------------
// integer determinant identities
// --------------------------------------------------------------------------

namespace {

using I128 = __int128;

I128 bareiss_det(std::vector<std::vector<I128>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  I128 prev = 1;
  int sign = 1;
  for (int col = 0; col < n - 1; ++col) {
    if (m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)] == 0) {
      int piv = -1;
      for (int i = col + 1; i < n; ++i)
        if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(piv)]);
      sign = -sign;
    }
    for (int i = col + 1; i < n; ++i) {
      for (int j = col + 1; j < n; ++j) {
        I128 v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                     m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)] -
                 m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] *
                     m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v / prev;
      }
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] = 0;
    }
    prev = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
  }
  I128 det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  return sign > 0 ? det : -det;
}

std::vector<std::vector<I128>> submatrix(const std::vector<std::vector<long long>>& a,
                                         const std::vector<int>& rows,
                                         const std::vector<int>& cols) {
  std::vector<std::vector<I128>> m(rows.size(), std::vector<I128>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m[i][j] = a[static_cast<std::size_t>(rows[i] - 1)][static_cast<std::size_t>(cols[j] - 1)];
  return m;
}

}  // namespace

IndexSets index_sets(const YoungDiagram& lambda, int r, int s) {
  if (!lambda.fits(r, s)) throw domain_error("index_sets: diagram outside the (r,s) box");
  IndexSets out;
  std::vector<bool> in(static_cast<std::size_t>(r + s + 1), false);
  for (int i = 1; i <= r; ++i) {
    int a = lambda.row(i - 1) + r + 1 - i;
    out.alpha.push_back(a);
    in[static_cast<std::size_t>(a)] = true;
  }
  for (int v = r + s; v >= 1; --v)
    if (!in[static_cast<std::size_t>(v)]) out.beta.push_back(v);
  for (int i = 1; i <= s; ++i) {
    int b = out.beta[static_cast<std::size_t>(s - i)];  // beta^{s+1-i}
    out.two_gamma.push_back(2 * (r + s) - 2 * b + 1);
  }
  for (int i = r; i >= 1; --i) out.t_ref.push_back(i);
  for (int i = s; i >= 1; --i) out.t_prime.push_back(i);
  for (int i = r + s; i > r; --i) out.t_comp.push_back(i);
  return out;
}

int concat_sign(const std::vector<int>& first, const std::vector<int>& second) {
  std::vector<int> seq = first;
  seq.insert(seq.end(), second.begin(), second.end());
  int n = static_cast<int>(seq.size());
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (int v : seq) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw domain_error("concat_sign: not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (seq[static_cast<std::size_t>(i)] > seq[static_cast<std::size_t>(j)]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

bool verify_minor_identity(const std::vector<std::vector<long long>>& a, std::vector<int> u_rows,
                           std::vector<int> t_cols) {
  int n = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) throw domain_error("minor identity: non-square matrix");
  int r = static_cast<int>(u_rows.size());
  if (static_cast<int>(t_cols.size()) != r || r < 0 || r > n)
    throw domain_error("minor identity: index set size mismatch");
  int s = n - r;

  std::sort(u_rows.begin(), u_rows.end(), std::greater<int>());
  std::sort(t_cols.begin(), t_cols.end(), std::greater<int>());
  auto complement = [&](const std::vector<int>& set) {
    std::vector<bool> in(static_cast<std::size_t>(n + 1), false);
    for (int v : set) {
      if (v < 1 || v > n) throw domain_error("minor identity: index out of range");
      in[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> out;
    for (int v = n; v >= 1; --v)
      if (!in[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
  };
  std::vector<int> uc = complement(u_rows), tc = complement(t_cols);

  // adjugate via cofactors, exactly
  std::vector<std::vector<long long>> b(static_cast<std::size_t>(n),
                                        std::vector<long long>(static_cast<std::size_t>(n)));
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      std::vector<int> rows, cols;
      for (int v : all)
        if (v != j) rows.push_back(v);
      for (int v : all)
        if (v != i) cols.push_back(v);
      I128 c = bareiss_det(submatrix(a, rows, cols));
      if ((i + j) % 2 != 0) c = -c;
      b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          static_cast<long long>(c);
    }
  }

  I128 det_a = bareiss_det(submatrix(a, all, all));
  I128 det_aut = bareiss_det(submatrix(a, u_rows, t_cols));
  I128 det_b_sub = bareiss_det(submatrix(b, tc, uc));

  I128 lhs = det_aut;
  for (int i = 0; i < s; ++i) lhs *= det_a;  // diagonal entries of A adj(A) are det(A)
  I128 rhs = det_a * det_b_sub;
  int sgn = concat_sign(u_rows, uc) * concat_sign(t_cols, tc);
  if (sgn < 0) rhs = -rhs;
  return lhs == rhs;
}

// --------------------------------------------------------------------------
// character identity checks
// --------------------------------------------------------------------------

CharDualityReport verify_char_duality(const YoungDiagram& lambda, const ULabel& u, int r, int s,
                                      long prec, double tol) {
  if (!lambda.fits(r, s)) throw domain_error("char duality: diagram outside the (r,s) box");
  if (u.rank != r || u.level != 2 * s + 1)
    throw domain_error("char duality: label does not belong to the rank-r level-(2s+1) set");
  if (u.kind == LabelKind::weight && !u.integer_entries())
    throw domain_error("char duality: weight labels must have integer entries here");

  CharDualityReport rep;
  int k = u.k();
  CharContext lhs_ctx(r, k, prec);
  CharContext rhs_ctx(s, k, prec);
  BWeight wl = young_to_weight(lambda, r);
  BWeight wr = young_to_weight(transpose(lambda), s);

  ULabel mapped = (u.kind == LabelKind::weight) ? orbit_bijection_plus(u) : orbit_bijection_zero(u);
  Complex lhs = char_value(wl.two_l(), u.eval_two_x(), lhs_ctx);
  Complex rhs = char_value(wr.two_l(), mapped.eval_two_x(), rhs_ctx);
  rep.sign = (u.kind == LabelKind::weight && lambda.size() % 2 != 0) ? -1 : 1;

  Complex diff = (rep.sign < 0) ? lhs + rhs : lhs - rhs;
  rep.lhs = lhs.re.to_double();
  rep.rhs = rhs.re.to_double();
  rep.residue = diff.mag1().to_double();

  // sign bookkeeping for the alpha/beta splitting of [r+s]
  IndexSets sets = index_sets(lambda, r, s);
  int expected = ((r * (r - 1) / 2 + s * (s - 1) / 2 + lambda.size()) % 2 == 0) ? 1 : -1;
  rep.sign_rule_ok = concat_sign(sets.alpha, sets.beta) == expected;

  rep.pass = rep.residue < tol && rep.sign_rule_ok;
  return rep;
}

bool verify_center_trace(const std::vector<BWeight>& lambdas, const BWeight& mu, int rank,
                         int level, long prec, double tol) {
  CharContext ctx(rank, level + 2 * rank - 1, prec);
  std::vector<int> p1 = u_label(mu, level).two_u;
  std::vector<int> p2 = u_label(sigma(mu, level), level).two_u;
  Complex prod1(1, prec), prod2(1, prec);
  for (const auto& w : lambdas) {
    if (!w.tensor_class()) throw domain_error("center trace: weights must be tensor class");
    prod1 = prod1 * char_value(w.two_l(), p1, ctx);
    prod2 = prod2 * char_value(w.two_l(), p2, ctx);
  }
  return (prod1 - prod2).mag1().to_double() < tol;
}

bool verify_trig1(const std::vector<int>& v_subset, int a, long prec, double tol) {
  if (a < 1) throw domain_error("trig1: a must be positive");
  std::vector<bool> in(static_cast<std::size_t>(a), false);
  std::vector<int> two_v;
  for (int v : v_subset) {
    if (v < 1 || v > a - 1) throw domain_error("trig1: subset must lie in {1..a-1}");
    in[static_cast<std::size_t>(v)] = true;
    two_v.push_back(2 * v);
  }
  std::vector<int> two_w;  // complement together with {a}
  two_w.push_back(2 * a);
  for (int v = a - 1; v >= 1; --v)
    if (!in[static_cast<std::size_t>(v)]) two_w.push_back(2 * v);

  int k = 2 * a;
  Real lhs = pow_si(Real(k, prec), static_cast<long>(two_v.size())) / phi_k(two_v, k, prec);
  Real rhs = pow_si(Real(k, prec), static_cast<long>(two_w.size())) / phi_k(two_w, k, prec);
  rhs *= 2;
  return abs(lhs - rhs).to_double() < tol * std::max(1.0, std::abs(lhs.to_double()));
}

bool verify_trig2(const std::vector<int>& two_vp, int a, long prec, double tol) {
  if (a < 1) throw domain_error("trig2: a must be positive");
  std::vector<bool> in(static_cast<std::size_t>(2 * a), false);
  for (int tv : two_vp) {
    if (tv < 1 || tv > 2 * a - 1 || tv % 2 == 0)
      throw domain_error("trig2: subset entries must be half-integers in (0, a)");
    in[static_cast<std::size_t>(tv)] = true;
  }
  std::vector<int> two_w;  // a - complement
  for (int tv = 1; tv <= 2 * a - 1; tv += 2)
    if (!in[static_cast<std::size_t>(tv)]) two_w.push_back(2 * a - tv);

  int k = 2 * a;
  Real lhs = pow_si(Real(k, prec), static_cast<long>(two_vp.size())) /
             phi_k(std::vector<int>(two_vp), k, prec);
  Real rhs = pow_si(Real(k, prec), static_cast<long>(two_w.size())) / phi_k(two_w, k, prec);
  return abs(lhs - rhs).to_double() < tol * std::max(1.0, std::abs(lhs.to_double()));
}

}  // namespace soblocks
