#include <doctest.h>

#include <cmath>

#include "soblocks/characters.hpp"

using namespace soblocks;

namespace {
const long kPrec = kDefaultPrecision;

double re(const Complex& c) { return c.re.to_double(); }
double im(const Complex& c) { return c.im.to_double(); }
}  // namespace

TEST_CASE("unit table") {
  CharContext ctx(3, 12, kPrec);
  CHECK(re(ctx.unit(0)) == doctest::Approx(1.0).epsilon(1e-25));
  CHECK(re(ctx.unit(24)) == doctest::Approx(-1.0).epsilon(1e-25));  // exp(i pi)
  CHECK(im(ctx.unit(12)) == doctest::Approx(1.0).epsilon(1e-25));   // exp(i pi / 2)
  CHECK(re(ctx.unit(-3)) == doctest::Approx(re(ctx.unit(4 * 12 - 3))).epsilon(1e-30));
}

TEST_CASE("trivial weight has character 1 at every label") {
  CharContext ctx(3, 12, kPrec);
  for (const auto& u : orbit_reps_integer(3, 3)) {
    Complex c = char_value(zero_weight(3).two_l(), u.eval_two_x(), ctx);
    CHECK(std::abs(re(c) - 1.0) < 1e-30);
    CHECK(std::abs(im(c)) < 1e-30);
  }
  for (const auto& u : orbit_reps_zero(3, 3)) {
    Complex c = char_value(zero_weight(3).two_l(), u.eval_two_x(), ctx);
    CHECK(std::abs(re(c) - 1.0) < 1e-30);
  }
}

TEST_CASE("vector weight character is a cosine sum") {
  // weights of the defining module are {0, +-L_i}, so the trace at the point
  // with coordinates u_i is 1 + sum_i 2 cos(pi u_i / (r+s))
  CharContext ctx(3, 12, kPrec);
  std::vector<int> point{5, 3, 1};  // (5/2, 3/2, 1/2)
  Complex c = char_value(fundamental_weight(3, 1).two_l(), point, ctx);
  double expect = 1.0;
  for (int tu : point) expect += 2.0 * std::cos(M_PI * tu / 12.0);
  CHECK(re(c) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(std::abs(im(c)) < 1e-12);
}

TEST_CASE("characters are real at label points") {
  CharContext ctx(3, 12, kPrec);
  for (const auto& y : diagrams_in_box(3, 3)) {
    if (y.size() > 3) continue;
    auto tl = young_to_weight(y, 3).two_l();
    for (const auto& u : orbit_reps_integer(3, 3))
      CHECK(std::abs(im(char_value(tl, u.eval_two_x(), ctx))) < 1e-30);
  }
}

TEST_CASE("degenerate evaluation point trips the singular guard") {
  CharContext ctx(3, 12, kPrec);
  CHECK_THROWS_AS(char_value(zero_weight(3).two_l(), {5, 5, 1}, ctx), precision_error);
}

TEST_CASE("weight system tables") {
  // Lambda^2 of the 7-dim module: dominant weights (1,1,0), (1,0,0), 0 with
  // multiplicities 1, 1, 3
  auto table = dominant_weight_multiplicities(fundamental_weight(3, 2).two_l(), 3);
  REQUIRE(table.size() == 3);
  long long zero_mult = 0;
  for (const auto& wm : table)
    if (wm.two_m == std::vector<int>{0, 0, 0}) zero_mult = wm.mult;
  CHECK(zero_mult == 3);

  CHECK(module_dimension(fundamental_weight(3, 1).two_l(), 3) == 7);
  CHECK(module_dimension(fundamental_weight(3, 2).two_l(), 3) == 21);
  CHECK(module_dimension(fundamental_weight(3, 3).two_l(), 3) == 8);  // spin module
  CHECK(module_dimension(young_to_weight(YoungDiagram({2}), 3).two_l(), 3) == 27);
}

TEST_CASE("weight system dimension agrees with the Weyl dimension formula") {
  for (int rank : {3, 4}) {
    for (const auto& y : diagrams_in_box(rank, 4)) {
      if (y.size() > 4) continue;
      auto tl = young_to_weight(y, rank).two_l();
      CHECK(module_dimension(tl, rank) == weyl_dimension(tl, rank));
    }
  }
  // spin class too
  CHECK(module_dimension(std::vector<int>{3, 1, 1}, 3) == weyl_dimension({3, 1, 1}, 3));
}

TEST_CASE("determinant character agrees with the weight-system oracle") {
  for (int s : {3, 4}) {
    const int r = 3, k = 2 * (r + s);
    CharContext ctx(r, k, kPrec);
    // every weight label of the level set plus both orbit-representative families
    std::vector<std::vector<int>> points;
    for (const auto& mu : level_set(r, 2 * s + 1, WeightClass::all))
      points.push_back(u_label(mu, 2 * s + 1).two_u);
    for (const auto& u : orbit_reps_integer(r, s)) points.push_back(u.eval_two_x());
    for (const auto& u : orbit_reps_zero(r, s)) points.push_back(u.eval_two_x());
    for (const auto& y : diagrams_in_box(3, s)) {
      if (y.size() > 4) continue;
      auto tl = young_to_weight(y, r).two_l();
      for (const auto& pt : points) {
        Complex a = char_value(tl, pt, ctx);
        Complex b = char_value_oracle(tl, pt, r, k, kPrec);
        CHECK((a - b).mag1().to_double() < 1e-9);
      }
    }
  }
}

TEST_CASE("oracle rejects oversize modules") {
  CHECK_THROWS_AS(dominant_weight_multiplicities(std::vector<int>{60, 0, 0}, 3), resource_error);
}

TEST_CASE("trace values of the boundary weight (2s+1) omega_1") {
  const int r = 3, s = 3, k = 12;
  CharContext ctx(r, k, kPrec);
  auto tl = BWeight(3, {7, 0, 0}).two_l();
  for (const auto& u : orbit_reps_integer(r, s)) {
    Complex c = char_value(tl, u.eval_two_x(), ctx);
    CHECK(re(c) == doctest::Approx(-1.0).epsilon(1e-9));
  }
  for (const auto& u : orbit_reps_zero(r, s)) {
    Complex c = char_value(tl, u.eval_two_x(), ctx);
    CHECK(re(c) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("positive-root sine product") {
  CHECK(std::abs(phi_k({}, 12, kPrec).to_double() - 1.0) < 1e-30);  // empty product
  CHECK(std::abs(phi_k({2 * 5}, 10, kPrec).to_double() - 4.0) < 1e-25);  // single factor at k=2a
  for (const auto& u : orbit_reps_integer(3, 3)) {
    Real direct = phi_k(u.eval_two_x(), 12, kPrec);
    Real roots = phi_k_from_roots(u.eval_two_x(), 3, 12, kPrec);
    CHECK(direct.to_double() > 0.0);
    CHECK(std::abs(direct.to_double() - roots.to_double()) <
          1e-9 * std::max(1.0, direct.to_double()));
  }
}

TEST_CASE("trig identities, exhaustive small orders") {
  for (int a = 2; a <= 6; ++a) {
    for (unsigned mask = 0; mask < (1u << (a - 1)); ++mask) {
      std::vector<int> v;
      for (int x = 1; x <= a - 1; ++x)
        if (mask & (1u << (x - 1))) v.push_back(x);
      CHECK(verify_trig1(v, a, kPrec));
    }
    for (unsigned mask = 0; mask < (1u << a); ++mask) {
      std::vector<int> v;
      int bit = 0;
      for (int tx = 1; tx <= 2 * a - 1; tx += 2, ++bit)
        if (mask & (1u << bit)) v.push_back(tx);
      CHECK(verify_trig2(v, a, kPrec));
    }
  }
}

TEST_CASE("index sets") {
  IndexSets sets = index_sets(YoungDiagram({1}), 3, 3);
  CHECK(sets.alpha == std::vector<int>{4, 2, 1});
  CHECK(sets.beta == std::vector<int>{6, 5, 3});
  CHECK(sets.two_gamma == std::vector<int>{7, 3, 1});  // (7/2, 3/2, 1/2)
  CHECK(sets.t_ref == std::vector<int>{3, 2, 1});
  CHECK(sets.t_comp == std::vector<int>{6, 5, 4});
  for (int s : {3, 4}) {
    for (const auto& y : diagrams_in_box(3, s)) {
      IndexSets is = index_sets(y, 3, s);
      // alpha and beta partition [r+s]
      std::vector<int> all = is.alpha;
      all.insert(all.end(), is.beta.begin(), is.beta.end());
      std::sort(all.begin(), all.end());
      for (int v = 1; v <= 3 + s; ++v) CHECK(all[static_cast<std::size_t>(v - 1)] == v);
      // gamma recovers the transposed weight's rho-shifted coordinates
      auto mt = young_to_weight(transpose(y), s).two_l();
      for (int j = 0; j < s; ++j)
        CHECK(is.two_gamma[static_cast<std::size_t>(j)] == mt[static_cast<std::size_t>(j)] + 2 * (s - 1 - j) + 1);
    }
  }
}

TEST_CASE("concatenation signs") {
  // T = (r..1), T^c = (r+s..r+1): sign (-1)^{r(r-1)/2 + s(s-1)/2}
  CHECK(concat_sign({3, 2, 1}, {6, 5, 4}) == 1);  // r=s=3: 3+3 even
  CHECK(concat_sign({2, 1}, {5, 4, 3}) == 1);     // r=2, s=3: 1+3 even
  CHECK(concat_sign({1, 3}, {2}) == -1);          // single inversion
  CHECK_THROWS_AS(concat_sign({1, 1}, {2, 3}), domain_error);
}

TEST_CASE("minor identity") {
  std::vector<std::vector<long long>> id6(6, std::vector<long long>(6, 0));
  for (int i = 0; i < 6; ++i) id6[i][i] = 1;
  CHECK(verify_minor_identity(id6, {1, 2, 3}, {1, 2, 3}));
  CHECK(verify_minor_identity(id6, {6, 4, 2}, {6, 4, 2}));

  // permutation matrix: pure sign bookkeeping
  std::vector<std::vector<long long>> perm(6, std::vector<long long>(6, 0));
  int sigma_perm[6] = {2, 0, 1, 4, 3, 5};
  for (int i = 0; i < 6; ++i) perm[i][sigma_perm[i]] = 1;
  CHECK(verify_minor_identity(perm, {1, 3, 5}, {2, 4, 6}));
  CHECK(verify_minor_identity(perm, {6, 5, 4}, {3, 2, 1}));

  SplitMix64 rng(2024);
  auto pick = [&rng]() {
    std::vector<int> p{1, 2, 3, 4, 5, 6}, out;
    for (int i = 0; i < 3; ++i) {
      std::size_t idx = rng.below(p.size());
      out.push_back(p[idx]);
      p.erase(p.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
  };
  for (int t = 0; t < 10; ++t) {
    std::vector<std::vector<long long>> a(6, std::vector<long long>(6));
    for (auto& row : a)
      for (auto& x : row) x = rng.range(-5, 5);
    CHECK(verify_minor_identity(a, pick(), pick()));  // holds for singular A too
  }
  CHECK_THROWS_AS(verify_minor_identity({{1, 2}, {3, 4}, {5, 6}}, {1}, {1}), domain_error);
}

TEST_CASE("character duality across the orbit bijections") {
  // empty diagram: both sides 1
  {
    ULabel u{3, 7, LabelKind::weight, {12, 4, 2}};
    auto rep = verify_char_duality(YoungDiagram(), u, 3, 3, kPrec);
    CHECK(rep.pass);
    CHECK(rep.sign == 1);
    CHECK(rep.lhs == doctest::Approx(1.0).epsilon(1e-9));
  }
  // single box at U = (6,2,1): odd size, sign -1
  {
    ULabel u{3, 7, LabelKind::weight, {12, 4, 2}};
    auto rep = verify_char_duality(YoungDiagram({1}), u, 3, 3, kPrec);
    CHECK(rep.pass);
    CHECK(rep.sign == -1);
  }
  // every diagram and label, both classes, both (3,3) and (3,4)
  for (int s : {3, 4}) {
    for (const auto& y : diagrams_in_box(3, s)) {
      for (const auto& u : orbit_reps_integer(3, s)) {
        auto rep = verify_char_duality(y, u, 3, s, kPrec);
        CHECK(rep.pass);
        CHECK(rep.sign_rule_ok);
      }
      for (const auto& u : orbit_reps_zero(3, s)) CHECK(verify_char_duality(y, u, 3, s, kPrec).pass);
    }
  }
}

TEST_CASE("center invariance of character products") {
  const int r = 3, level = 7;
  CHECK(verify_center_trace({zero_weight(3), zero_weight(3)}, fundamental_weight(3, 2), r, level,
                            kPrec));
  BWeight box = young_to_weight(YoungDiagram({1}), 3);
  CHECK(verify_center_trace({box, box}, zero_weight(3), r, level, kPrec));
  BWeight two = young_to_weight(YoungDiagram({2}), 3);
  BWeight oneone = young_to_weight(YoungDiagram({1, 1}), 3);
  for (const auto& mu : level_set(r, level, WeightClass::all))
    CHECK(verify_center_trace({two, oneone}, mu, r, level, kPrec));
}
