#include "soblocks/weights.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace soblocks {

BWeight::BWeight(int r, std::vector<int> a) : rank(r), fund(std::move(a)) {
  if (rank < 1) throw domain_error("weight: rank must be >= 1");
  if (static_cast<int>(fund.size()) != rank)
    throw domain_error("weight: expected " + std::to_string(rank) + " fundamental coordinates");
  for (int c : fund)
    if (c < 0) throw domain_error("weight: fundamental coordinates must be nonnegative");
}

std::vector<int> BWeight::two_l() const {
  std::vector<int> out(static_cast<std::size_t>(rank));
  int acc = fund[static_cast<std::size_t>(rank - 1)];  // a_r contributes 1/2 per row
  out[static_cast<std::size_t>(rank - 1)] = acc;
  for (int i = rank - 2; i >= 0; --i) {
    acc += 2 * fund[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

int BWeight::level() const {
  if (rank == 1) return fund[0];  // B_1 degenerates to sl_2
  int mid = 0;
  for (int i = 1; i + 1 < rank; ++i) mid += fund[static_cast<std::size_t>(i)];
  return fund.front() + 2 * mid + fund.back();
}

BWeight zero_weight(int rank) { return BWeight(rank, std::vector<int>(static_cast<std::size_t>(rank), 0)); }

BWeight fundamental_weight(int rank, int i) {
  if (i < 1 || i > rank) throw domain_error("fundamental_weight: index out of range");
  std::vector<int> a(static_cast<std::size_t>(rank), 0);
  a[static_cast<std::size_t>(i - 1)] = 1;
  return BWeight(rank, std::move(a));
}

BWeight weight_from_two_l(int rank, const std::vector<int>& two_l) {
  if (static_cast<int>(two_l.size()) != rank) throw domain_error("weight_from_two_l: size mismatch");
  std::vector<int> a(static_cast<std::size_t>(rank));
  for (int i = 0; i + 1 < rank; ++i) {
    int d = two_l[static_cast<std::size_t>(i)] - two_l[static_cast<std::size_t>(i + 1)];
    if (d < 0 || d % 2 != 0) throw domain_error("weight_from_two_l: coordinates not dominant");
    a[static_cast<std::size_t>(i)] = d / 2;
  }
  if (two_l.back() < 0) throw domain_error("weight_from_two_l: coordinates not dominant");
  a[static_cast<std::size_t>(rank - 1)] = two_l.back();
  return BWeight(rank, std::move(a));
}

BWeight young_to_weight(const YoungDiagram& y, int rank) {
  if (y.num_rows() > rank)
    throw domain_error("young_to_weight: diagram has more rows than the rank");
  std::vector<int> two_l(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) two_l[static_cast<std::size_t>(i)] = 2 * y.row(i);
  return weight_from_two_l(rank, two_l);
}

YoungDiagram weight_to_young(const BWeight& w) {
  if (!w.tensor_class()) throw domain_error("weight_to_young: weight is not tensor class");
  auto tl = w.two_l();
  std::vector<int> rows;
  for (int v : tl)
    if (v > 0) rows.push_back(v / 2);
  return YoungDiagram(std::move(rows));
}

BWeight sigma(const BWeight& w, int level) {
  int lv = w.level();
  if (lv > level) throw domain_error("sigma: weight above level");
  std::vector<int> a = w.fund;
  // first coordinate becomes level - (theta, w); swaps u_1 with k - u_1
  a[0] = level - lv;
  return BWeight(w.rank, std::move(a));
}

std::vector<BWeight> level_set(int rank, int level, WeightClass cls) {
  if (rank < 1 || level < 0) throw domain_error("level_set: bad parameters");
  std::vector<BWeight> out;
  std::vector<int> a(static_cast<std::size_t>(rank), 0);
  std::function<void(int)> gen = [&](int pos) {
    if (pos == rank) {
      BWeight w(rank, a);
      if (w.level() <= level && (cls == WeightClass::all || w.tensor_class())) out.push_back(w);
      return;
    }
    // coordinate weight in the level pairing
    int mult = (rank == 1) ? 1 : ((pos == 0 || pos == rank - 1) ? 1 : 2);
    for (int v = 0; v * mult <= level; ++v) {
      a[static_cast<std::size_t>(pos)] = v;
      gen(pos + 1);
    }
    a[static_cast<std::size_t>(pos)] = 0;
  };
  gen(0);
  return out;  // already lexicographic in the fundamental coordinates
}

bool small_rank(int rank) { return rank < 3; }

// --------------------------------------------------------------------------

bool ULabel::integer_entries() const {
  for (int v : two_u)
    if (v % 2 != 0) return false;
  return true;
}

std::vector<int> ULabel::eval_two_x() const {
  std::vector<int> x = two_u;
  if (kind == LabelKind::zero_class)
    for (int& v : x) v -= 1;
  return x;
}

static void validate_label(const ULabel& u) {
  if (u.rank < 1 || static_cast<int>(u.two_u.size()) != u.rank)
    throw domain_error("u-label: size mismatch");
  int parity = ((u.two_u[0] % 2) + 2) % 2;
  for (std::size_t i = 0; i < u.two_u.size(); ++i) {
    if (u.two_u[i] <= 0) throw domain_error("u-label: entries must be positive");
    if (((u.two_u[i] % 2) + 2) % 2 != parity)
      throw domain_error("u-label: entries must lie in one integrality class");
    if (i + 1 < u.two_u.size() && u.two_u[i] <= u.two_u[i + 1])
      throw domain_error("u-label: entries must be strictly decreasing");
  }
  if (u.kind == LabelKind::zero_class && parity != 0)
    throw domain_error("u-label: zero_class entries must be integers");
  if (u.rank >= 2 && u.two_u[0] + u.two_u[1] > 2 * u.k())
    throw domain_error("u-label: level bound violated");
}

ULabel u_label(const BWeight& w, int level) {
  if (w.level() > level) throw domain_error("u_label: weight above level");
  ULabel u;
  u.rank = w.rank;
  u.level = level;
  u.kind = LabelKind::weight;
  u.two_u.resize(static_cast<std::size_t>(w.rank));
  auto tl = w.two_l();
  for (int i = 0; i < w.rank; ++i)
    u.two_u[static_cast<std::size_t>(i)] = tl[static_cast<std::size_t>(i)] + 2 * (w.rank - 1 - i) + 1;
  validate_label(u);
  return u;
}

ULabel u0_label(const BWeight& w, int level) {
  if (!w.tensor_class()) throw domain_error("u0_label: weight is not tensor class");
  if (w.level() > level) throw domain_error("u0_label: weight above level");
  ULabel u;
  u.rank = w.rank;
  u.level = level;
  u.kind = LabelKind::zero_class;
  u.two_u.resize(static_cast<std::size_t>(w.rank));
  auto tl = w.two_l();
  for (int i = 0; i < w.rank; ++i)
    u.two_u[static_cast<std::size_t>(i)] = tl[static_cast<std::size_t>(i)] + 2 * (w.rank - i);
  validate_label(u);
  return u;
}

BWeight from_u_label(const ULabel& u) {
  validate_label(u);
  std::vector<int> two_l(static_cast<std::size_t>(u.rank));
  for (int i = 0; i < u.rank; ++i) {
    int off = (u.kind == LabelKind::weight) ? 2 * (u.rank - 1 - i) + 1 : 2 * (u.rank - i);
    two_l[static_cast<std::size_t>(i)] = u.two_u[static_cast<std::size_t>(i)] - off;
    if (two_l[static_cast<std::size_t>(i)] < 0) throw domain_error("from_u_label: not a dominant weight");
  }
  BWeight w = weight_from_two_l(u.rank, two_l);
  if (w.level() > u.level) throw domain_error("from_u_label: weight above level");
  return w;
}

ULabel sigma(const ULabel& u) {
  validate_label(u);
  ULabel out = u;
  int top = (u.kind == LabelKind::weight) ? 2 * u.k() : 2 * (u.k() + 1);
  out.two_u[0] = top - u.two_u[0];
  std::sort(out.two_u.begin(), out.two_u.end(), std::greater<int>());
  validate_label(out);
  return out;
}

OrbitClass orbit_of(const ULabel& u) {
  validate_label(u);
  OrbitClass oc;
  if (u.kind == LabelKind::weight) {
    oc.length = (u.two_u[0] == u.k()) ? 1 : 2;
    oc.rep = (u.two_u[0] > u.k()) ? sigma(u) : u;
  } else {
    oc.length = 2;  // u'_1 = (k+1)/2 is impossible for integer entries
    oc.rep = (u.two_u[0] > u.k() + 1) ? sigma(u) : u;
  }
  return oc;
}

static std::vector<std::vector<int>> descending_subsets(int n, int r) {
  // r-subsets of {1..n}, each listed in decreasing order, enumerated in
  // ascending combination order.
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    std::vector<int> desc(c.rbegin(), c.rend());
    out.push_back(desc);
    int i = r - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - (r - 1 - i)) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<ULabel> orbit_reps_integer(int r, int s) {
  std::vector<ULabel> out;
  for (auto& sub : descending_subsets(r + s, r)) {
    ULabel u;
    u.rank = r;
    u.level = 2 * s + 1;
    u.kind = LabelKind::weight;
    for (int v : sub) u.two_u.push_back(2 * v);
    validate_label(u);
    out.push_back(std::move(u));
  }
  return out;
}

std::vector<ULabel> orbit_reps_zero(int r, int s) {
  std::vector<ULabel> out;
  for (auto& sub : descending_subsets(r + s, r)) {
    ULabel u;
    u.rank = r;
    u.level = 2 * s + 1;
    u.kind = LabelKind::zero_class;
    for (int v : sub) u.two_u.push_back(2 * v);
    validate_label(u);
    out.push_back(std::move(u));
  }
  return out;
}

static int half_levels(const ULabel& u, const char* who) {
  if (u.level % 2 == 0 || u.level < 3)
    throw domain_error(std::string(who) + ": label level must be odd (2s+1)");
  return (u.level - 1) / 2;
}

ULabel orbit_bijection_plus(const ULabel& u) {
  validate_label(u);
  if (u.kind != LabelKind::weight || !u.integer_entries())
    throw domain_error("orbit_bijection_plus: expected an integer-entry weight label");
  int s = half_levels(u, "orbit_bijection_plus");
  int n = u.rank + s;
  std::vector<bool> in(static_cast<std::size_t>(n + 1), false);
  for (int v : u.two_u) {
    int x = v / 2;
    if (x < 1 || x > n) throw domain_error("orbit_bijection_plus: entry outside [r+s]");
    in[static_cast<std::size_t>(x)] = true;
  }
  ULabel out;
  out.rank = s;
  out.level = 2 * u.rank + 1;
  out.kind = LabelKind::weight;
  for (int x = n; x >= 1; --x)
    if (!in[static_cast<std::size_t>(x)]) out.two_u.push_back(2 * x);
  validate_label(out);
  return out;
}

ULabel orbit_bijection_zero(const ULabel& u) {
  validate_label(u);
  if (u.kind != LabelKind::zero_class)
    throw domain_error("orbit_bijection_zero: expected a zero_class label");
  int s = half_levels(u, "orbit_bijection_zero");
  int n = u.rank + s;
  std::vector<bool> in(static_cast<std::size_t>(n + 1), false);
  for (int v : u.two_u) {
    int x = v / 2;
    if (x < 1 || x > n) throw domain_error("orbit_bijection_zero: entry outside [r+s]");
    in[static_cast<std::size_t>(x)] = true;
  }
  ULabel out;
  out.rank = s;
  out.level = 2 * u.rank + 1;
  out.kind = LabelKind::zero_class;
  for (int x = 1; x <= n; ++x)
    if (!in[static_cast<std::size_t>(x)]) out.two_u.push_back(2 * (n + 1 - x));
  std::sort(out.two_u.begin(), out.two_u.end(), std::greater<int>());
  validate_label(out);
  return out;
}

std::string to_string(const BWeight& w) {
  std::ostringstream os;
  os << "B" << w.rank << '(';
  for (int i = 0; i < w.rank; ++i) {
    if (i) os << ',';
    os << w.fund[static_cast<std::size_t>(i)];
  }
  os << ')';
  return os.str();
}

std::string to_string(const ULabel& u) {
  std::ostringstream os;
  os << (u.kind == LabelKind::weight ? "U(" : "U0(");
  for (std::size_t i = 0; i < u.two_u.size(); ++i) {
    if (i) os << ',';
    if (u.two_u[i] % 2 == 0)
      os << u.two_u[i] / 2;
    else
      os << u.two_u[i] << "/2";
  }
  os << ')';
  return os.str();
}

}  // namespace soblocks
