#include "soblocks/fock.hpp"

#include <algorithm>
#include <sstream>

namespace soblocks {

int two_energy(const Monomial& m) {
  int e = 0;
  for (const auto& md : m) e -= md.two_a;
  return e;
}

void FockContext::check_mode(const Mode& m) const {
  if (m.j < -r || m.j > r || m.p < -s || m.p > s)
    throw domain_error("fock: mode index out of range");
  if (m.two_a % 2 == 0) throw domain_error("fock: mode exponent must be a half-integer");
}

FockVector FockVector::vacuum() { return monomial(Monomial{}); }

FockVector FockVector::monomial(Monomial m, Rational c) {
  FockVector v;
  if (c != 0) v.terms_.emplace(std::move(m), std::move(c));
  return v;
}

void FockVector::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

FockVector operator+(const FockVector& a, const FockVector& b) {
  FockVector out = a;
  for (const auto& [m, c] : b.terms_) out.add(m, c);
  return out;
}

FockVector operator-(const FockVector& a, const FockVector& b) {
  FockVector out = a;
  for (const auto& [m, c] : b.terms_) out.add(m, -c);
  return out;
}

FockVector operator*(const FockVector& a, const Rational& c) {
  FockVector out;
  if (c == 0) return out;
  for (const auto& [m, co] : a.terms_) out.terms_.emplace(m, co * c);
  return out;
}

std::optional<int> FockVector::homogeneous_two_energy() const {
  std::optional<int> e;
  for (const auto& [m, c] : terms_) {
    int te = two_energy(m);
    if (e && *e != te) return std::nullopt;
    e = te;
  }
  return e;
}

std::optional<int> FockVector::homogeneous_parity() const {
  std::optional<int> p;
  for (const auto& [m, c] : terms_) {
    int mp = static_cast<int>(m.size()) % 2;
    if (p && *p != mp) return std::nullopt;
    p = mp;
  }
  return p;
}

namespace {

// Apply one mode to a monomial in place; returns false when the term dies.
// sign accumulates the fermionic reordering sign.
bool apply_mode(const Mode& md, Monomial& mono, int& sign, const FockContext& ctx) {
  ctx.check_mode(md);
  if (md.creation()) {
    auto pos = std::lower_bound(mono.begin(), mono.end(), md);
    if (pos != mono.end() && *pos == md) return false;  // exterior square
    if (two_energy(mono) - md.two_a > ctx.max_two_energy)
      throw resource_error("fock: energy bound exceeded");
    if ((pos - mono.begin()) % 2 != 0) sign = -sign;
    mono.insert(pos, md);
  } else {
    Mode partner{-md.j, -md.p, -md.two_a};
    auto pos = std::lower_bound(mono.begin(), mono.end(), partner);
    if (pos == mono.end() || !(*pos == partner)) return false;  // nothing to contract
    if ((pos - mono.begin()) % 2 != 0) sign = -sign;
    mono.erase(pos);
  }
  return true;
}

}  // namespace

FockVector clifford_apply(const Mode& m, const FockVector& v, const FockContext& ctx) {
  FockVector out;
  for (const auto& [mono, coeff] : v.terms()) {
    Monomial work = mono;
    int sign = 1;
    if (apply_mode(m, work, sign, ctx)) out.add(work, sign > 0 ? coeff : -coeff);
  }
  return out;
}

FockVector current_apply(const CurrentOp& op, const FockVector& v, const FockContext& ctx) {
  // B^{j,p}_{k,q}(m) = sum_{a+b=m} :phi^A(a) phi^C(b):  with A=(j,p), C=(-k,-q).
  const int Aj = op.j, Ap = op.p, Cj = -op.k, Cp = -op.q;
  ctx.check_mode(Mode{Aj, Ap, -1});
  ctx.check_mode(Mode{Cj, Cp, -1});
  FockVector out;

  auto emit = [&](const Monomial& base, const Rational& coeff, const Mode& first,
                  const Mode& second, int presign) {
    // operator product first*second applied right-to-left
    Monomial work = base;
    int sign = presign;
    if (!apply_mode(second, work, sign, ctx)) return;
    if (!apply_mode(first, work, sign, ctx)) return;
    out.add(work, sign > 0 ? coeff : -coeff);
  };

  for (const auto& [mono, coeff] : v.terms()) {
    // (1) both modes create: a,b < 0, a+b = m
    for (int two_a = 2 * op.m + 1; two_a <= -1; two_a += 2) {
      int two_b = 2 * op.m - two_a;
      emit(mono, coeff, Mode{Aj, Ap, two_a}, Mode{Cj, Cp, two_b}, +1);
    }
    // (2) a < 0 < b: phi^C(b) contracts a mode (k,q,-b) present in the monomial
    for (const auto& w : mono) {
      if (w.j != op.k || w.p != op.q) continue;
      int two_b = -w.two_a;
      int two_a = 2 * op.m - two_b;
      if (two_a < 0) emit(mono, coeff, Mode{Aj, Ap, two_a}, Mode{Cj, Cp, two_b}, +1);
    }
    // (3) a > 0 > b: normal ordering swaps the factors and flips the sign
    for (const auto& w : mono) {
      if (w.j != -Aj || w.p != -Ap) continue;
      int two_a = -w.two_a;
      int two_b = 2 * op.m - two_a;
      if (two_a > 0 && two_b < 0)
        emit(mono, coeff, Mode{Cj, Cp, two_b}, Mode{Aj, Ap, two_a}, -1);
    }
    // (4) both modes annihilate: a,b > 0, a+b = m
    for (int two_a = 1; two_a <= 2 * op.m - 1; two_a += 2) {
      int two_b = 2 * op.m - two_a;
      emit(mono, coeff, Mode{Aj, Ap, two_a}, Mode{Cj, Cp, two_b}, +1);
    }
  }
  return out;
}

FockVector subalgebra_apply(Side side, int upper, int lower, int m, const FockVector& v,
                            const FockContext& ctx) {
  FockVector out;
  if (side == Side::left) {
    if (std::abs(upper) > ctx.r || std::abs(lower) > ctx.r)
      throw domain_error("subalgebra_apply: left index out of range");
    for (int p = -ctx.s; p <= ctx.s; ++p)
      out = out + current_apply(CurrentOp{upper, p, lower, p, m}, v, ctx);
  } else {
    if (std::abs(upper) > ctx.s || std::abs(lower) > ctx.s)
      throw domain_error("subalgebra_apply: right index out of range");
    for (int j = -ctx.r; j <= ctx.r; ++j)
      out = out + current_apply(CurrentOp{j, upper, j, lower, m}, v, ctx);
  }
  return out;
}

// --------------------------------------------------------------------------

SoElement so_from_current(int j, int p, int k, int q) {
  SoElement m;
  m[{j, p, k, q}] += Rational(1);
  m[{-k, -q, -j, -p}] -= Rational(1);
  for (auto it = m.begin(); it != m.end();)
    it = (it->second == 0) ? m.erase(it) : std::next(it);
  return m;
}

SoElement so_commutator(const SoElement& x, const SoElement& y) {
  SoElement out;
  auto acc = [&out](const std::array<int, 4>& key, const Rational& c) {
    if (c == 0) return;
    auto it = out.find(key);
    if (it == out.end())
      out.emplace(key, c);
    else {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      // E^{a01}_{a23} E^{b01}_{b23} = d(a23,b01) E^{a01}_{b23}
      if (a[2] == b[0] && a[3] == b[1]) acc({a[0], a[1], b[2], b[3]}, ca * cb);
      if (b[2] == a[0] && b[3] == a[1]) acc({b[0], b[1], a[2], a[3]}, -(ca * cb));
    }
  return out;
}

Rational so_invariant_form(const SoElement& x, const SoElement& y) {
  Rational tr(0);
  for (const auto& [a, ca] : x) {
    auto it = y.find({a[2], a[3], a[0], a[1]});
    if (it != y.end()) tr += ca * it->second;
  }
  return tr / 2;
}

FockVector so_current_apply(const SoElement& x, int m, const FockVector& v,
                            const FockContext& ctx) {
  FockVector out;
  for (const auto& [key, c] : x) {
    // E^{A}_{B} contributes the bilinear with factors phi^{A} and phi^{-B},
    // which is exactly the current with upper pair A and lower pair B
    CurrentOp op{key[0], key[1], key[2], key[3], m};
    out = out + current_apply(op, v, ctx) * (c / 2);
  }
  return out;
}

// --------------------------------------------------------------------------
// highest-weight vectors
// --------------------------------------------------------------------------

ZeroOneGrid hwv_grid(const YoungDiagram& lambda, Variant variant, int r, int s) {
  if (!lambda.fits(r, s)) throw domain_error("hwv: diagram outside the (r,s) box");
  ZeroOneGrid g(r, s);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= s; ++j)
      if (lambda.has_box(i, j)) g.at(i, j) = 0;

  auto twist_left = [](const ZeroOneGrid& in) {
    ZeroOneGrid out = in;
    for (int p = -in.s; p <= in.s; ++p)
      out.at(1, p) = in.at(1, p) - (in.at(1, std::abs(p)) == 1 ? 1 : 0);
    return out;
  };
  auto twist_right = [](const ZeroOneGrid& in) {
    ZeroOneGrid out = in;
    for (int j = -in.r; j <= in.r; ++j)
      out.at(j, 1) = in.at(j, 1) - (in.at(std::abs(j), 1) == 1 ? 1 : 0);
    return out;
  };

  if (variant == Variant::sigma_right || variant == Variant::sigma_both) g = twist_right(g);
  if (variant == Variant::sigma_left || variant == Variant::sigma_both) g = twist_left(g);
  for (int v : g.e)
    if (v != 0 && v != 1) throw precision_error("hwv: grid left the 0/1 range");
  return g;
}

FockVector hwv_wedge(const YoungDiagram& lambda, Variant variant, const FockContext& ctx) {
  Monomial m;
  if (lambda.empty() && variant == Variant::sigma_both) {
    // Both twists of the vacuum component: the required weights force the
    // full row 1 and column 1 with the corner occupied at two depths and the
    // conjugate slots (1,-1), (-1,1) left empty; no depth-1/2 grid encodes it.
    for (int p = -ctx.s; p <= ctx.s; ++p)
      if (p != -1) m.push_back(Mode{1, p, -1});
    for (int j = -ctx.r; j <= ctx.r; ++j)
      if (j != 1 && j != -1) m.push_back(Mode{j, 1, -1});
    m.push_back(Mode{1, 1, -3});
  } else {
    ZeroOneGrid g = hwv_grid(lambda, variant, ctx.r, ctx.s);
    for (int j = -ctx.r; j <= ctx.r; ++j)
      for (int p = -ctx.s; p <= ctx.s; ++p)
        if (g.at(j, p) == 0) m.push_back(Mode{j, p, -1});
  }
  std::sort(m.begin(), m.end());
  if (two_energy(m) > ctx.max_two_energy) throw resource_error("hwv: energy bound exceeded");
  return FockVector::monomial(std::move(m));
}

FockVector lowest_wedge(const YoungDiagram& lambda, const FockContext& ctx) {
  if (!lambda.fits(ctx.r, ctx.s)) throw domain_error("lowest_wedge: diagram outside the box");
  Monomial m;
  for (int i = 1; i <= lambda.num_rows(); ++i)
    for (int j = 1; j <= lambda.row(i - 1); ++j) m.push_back(Mode{-i, -j, -1});
  std::sort(m.begin(), m.end());
  if (two_energy(m) > ctx.max_two_energy) throw resource_error("lowest_wedge: energy bound");
  return FockVector::monomial(std::move(m));
}

HwvReport verify_hwv(const FockVector& v, const BWeight& left, const BWeight& right,
                     const FockContext& ctx) {
  if (left.rank != ctx.r || right.rank != ctx.s) throw domain_error("verify_hwv: rank mismatch");
  HwvReport rep;
  auto fail = [&rep](std::string msg) { rep.failures.push_back(std::move(msg)); };

  if (v.is_zero()) {
    fail("vector is zero");
    return rep;
  }
  auto e = v.homogeneous_two_energy();
  auto par = v.homogeneous_parity();
  if (!e || !par) {
    fail("vector is not homogeneous");
    return rep;
  }
  rep.energy = Rational(*e, 2);
  rep.wedge_parity = *par;

  // Cartan eigenvalues on both sides
  auto check_cartans = [&](Side side, const BWeight& w, int rank, const char* name) {
    auto tl = w.two_l();
    for (int i = 1; i <= rank; ++i) {
      FockVector got = subalgebra_apply(side, i, i, 0, v, ctx);
      FockVector want = v * Rational(tl[static_cast<std::size_t>(i - 1)], 2);
      if (!(got == want))
        fail(std::string(name) + " Cartan " + std::to_string(i) + " eigenvalue mismatch");
    }
  };
  check_cartans(Side::left, left, ctx.r, "left");
  check_cartans(Side::right, right, ctx.s, "right");

  // annihilation by the raising part: simple raisings at mode 0 and the
  // lowered-highest-root generator at mode 1, for each factor
  auto check_raising = [&](Side side, int rank, const char* name) {
    for (int i = 1; i < rank; ++i)
      if (!subalgebra_apply(side, i, i + 1, 0, v, ctx).is_zero())
        fail(std::string(name) + " raising " + std::to_string(i) + " does not annihilate");
    if (!subalgebra_apply(side, rank, 0, 0, v, ctx).is_zero())
      fail(std::string(name) + " short raising does not annihilate");
    FockVector ftheta = (rank >= 2) ? subalgebra_apply(side, -1, 2, 1, v, ctx)
                                    : subalgebra_apply(side, -1, 0, 1, v, ctx);
    if (!ftheta.is_zero())
      fail(std::string(name) + " affine generator at mode 1 does not annihilate");
  };
  check_raising(Side::left, ctx.r, "left");
  check_raising(Side::right, ctx.s, "right");

  // parity and energy against the branching data
  Rational dsum =
      trace_anomaly(left, 2 * ctx.s + 1) + trace_anomaly(right, 2 * ctx.r + 1);
  Rational twice = dsum * 2;
  if (boost::multiprecision::denominator(twice) != 1) {
    fail("combined trace anomaly is not a half-integer");
  } else {
    bool vac = boost::multiprecision::numerator(twice) % 2 == 0;
    rep.source = vac ? Level1::vacuum : Level1::vector;
    if ((rep.wedge_parity == 0) != vac) fail("wedge parity does not match the source module");
    if (rep.energy != dsum) fail("energy degree does not equal the combined trace anomaly");
  }

  rep.pass = rep.failures.empty();
  return rep;
}

std::vector<std::array<int, 4>> box_pair_sequence(const YoungDiagram& lambda) {
  std::vector<std::array<int, 2>> boxes;  // row-major box order
  for (int i = 1; i <= lambda.num_rows(); ++i)
    for (int j = 1; j <= lambda.row(i - 1); ++j) boxes.push_back({i, j});
  std::size_t start = (lambda.size() % 2 == 1) ? 1 : 0;  // odd totals start from the single box
  std::vector<std::array<int, 4>> out;
  for (std::size_t t = start; t + 1 < boxes.size(); t += 2)
    out.push_back({boxes[t][0], boxes[t][1], boxes[t + 1][0], boxes[t + 1][1]});
  return out;
}

KacMoodyResult kacmoody_build(const YoungDiagram& lambda,
                              const std::vector<std::array<int, 4>>& box_pairs,
                              const FockContext& ctx) {
  if (!lambda.fits(ctx.r, ctx.s)) throw domain_error("kacmoody: diagram outside the box");
  bool odd = lambda.size() % 2 == 1;
  YoungDiagram cur = odd ? YoungDiagram({1}) : YoungDiagram();
  FockVector v = odd ? FockVector::monomial({Mode{1, 1, -1}}) : FockVector::vacuum();
  if (odd && !lambda.has_box(1, 1)) throw domain_error("kacmoody: odd diagram must contain (1,1)");

  for (const auto& step : box_pairs) {
    int a = step[0], b = step[1], c = step[2], d = step[3];
    if (std::make_pair(a, b) >= std::make_pair(c, d))
      throw domain_error("kacmoody: box pair must be lexicographically increasing");
    auto rows = cur.rows();
    rows.resize(static_cast<std::size_t>(ctx.r), 0);
    auto add_box = [&rows, &ctx](int i, int j) {
      if (i < 1 || i > ctx.r || j < 1 || j > ctx.s) throw domain_error("kacmoody: box outside the grid");
      if (rows[static_cast<std::size_t>(i - 1)] != j - 1)
        throw domain_error("kacmoody: box does not extend the diagram");
      rows[static_cast<std::size_t>(i - 1)] = j;
    };
    add_box(a, b);
    add_box(c, d);
    YoungDiagram next(rows);  // validates the shape
    v = current_apply(CurrentOp{a, b, -c, -d, -1}, v, ctx);
    cur = next;
  }
  if (!(cur == lambda)) throw domain_error("kacmoody: sequence does not build the diagram");

  KacMoodyResult res;
  res.vector = v;
  FockVector target = hwv_wedge(lambda, Variant::plain, ctx);
  const Monomial& key = target.terms().begin()->first;
  auto it = v.terms().find(key);
  res.scalar = (it == v.terms().end()) ? Rational(0) : it->second;
  res.proportional = (res.scalar != 0) && (v == target * res.scalar);
  return res;
}

bool verify_gauge_vanishing(int a, int b, int c, int d, const FockVector& phi3,
                            const FockContext& ctx) {
  return current_apply(CurrentOp{a, b, -c, -d, 1}, phi3, ctx).is_zero();
}

Rational q_pair(const FockVector& u, const FockVector& v) {
  auto check = [](const FockVector& x) {
    for (const auto& [m, c] : x.terms())
      if (m.size() != 1 || m[0].two_a != -1)
        throw domain_error("q_pair: arguments must be homogeneous of degree 1/2");
  };
  check(u);
  check(v);
  Rational out(0);
  for (const auto& [mu, cu] : u.terms())
    for (const auto& [mv, cv] : v.terms())
      if (mv[0].j == -mu[0].j && mv[0].p == -mu[0].p) out += cu * cv;
  return out;
}

std::string to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << '^';
    os << "phi(" << m[i].j << ',' << m[i].p << ',' << m[i].two_a << "/2)";
  }
  return os.str();
}

std::string to_string(const FockVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    os << rational_string(c) << "*" << to_string(m);
  }
  return os.str();
}

}  // namespace soblocks
