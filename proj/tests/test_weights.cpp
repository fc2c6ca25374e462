#include <doctest.h>

#include <algorithm>
#include <set>

#include "soblocks/weights.hpp"

using namespace soblocks;

TEST_CASE("young_to_weight") {
  CHECK(young_to_weight(YoungDiagram({1}), 3) == fundamental_weight(3, 1));
  CHECK(young_to_weight(YoungDiagram(), 3) == zero_weight(3));
  // invert lambda^i = a_i + ... + a_{r-1} + a_r/2 by hand: [2,1] -> (1,1,0)
  CHECK(young_to_weight(YoungDiagram({2, 1}), 3) == BWeight(3, {1, 1, 0}));
  CHECK_THROWS_AS(young_to_weight(YoungDiagram({1, 1, 1, 1}), 3), domain_error);
  for (const auto& y : diagrams_in_box(3, 5)) {
    BWeight w = young_to_weight(y, 3);
    CHECK(w.tensor_class());
    CHECK(weight_to_young(w) == y);
  }
}

TEST_CASE("sigma action") {
  CHECK(sigma(zero_weight(3), 7) == BWeight(3, {7, 0, 0}));
  CHECK(sigma(fundamental_weight(3, 2), 7) == BWeight(3, {5, 1, 0}));
  BWeight w = young_to_weight(YoungDiagram({2, 1}), 3);
  CHECK(sigma(sigma(w, 7), 7) == w);
  CHECK_THROWS_AS(sigma(BWeight(3, {8, 0, 0}), 7), domain_error);
}

TEST_CASE("level sets") {
  auto tensor = level_set(3, 7, WeightClass::tensor);
  CHECK(tensor.size() == 40);  // 2 C(6,3)
  auto all = level_set(3, 7, WeightClass::all);
  CHECK(all.size() == 70);
  std::set<BWeight> dedup(all.begin(), all.end());
  CHECK(dedup.size() == all.size());
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const auto& w : all) CHECK(w.level() <= 7);

  // B_1 convention: level of a_1 omega_1 is a_1
  auto b1 = level_set(1, 1, WeightClass::all);
  CHECK(b1.size() == 2);
  CHECK(b1[0] == zero_weight(1));
  CHECK(b1[1] == fundamental_weight(1, 1));
  CHECK(small_rank(1));
  CHECK_FALSE(small_rank(3));
}

TEST_CASE("sigma is an involution preserving the tensor class") {
  for (const auto& w : level_set(3, 7, WeightClass::all)) {
    BWeight t = sigma(w, 7);
    CHECK(t.level() <= 7);
    CHECK(sigma(t, 7) == w);
    CHECK(t.tensor_class() == w.tensor_class());
  }
}

TEST_CASE("tensor level set = diagrams plus their sigma images") {
  std::set<BWeight> expect;
  for (const auto& y : diagrams_in_box(3, 3)) {
    BWeight w = young_to_weight(y, 3);
    CHECK(expect.insert(w).second);
    CHECK(expect.insert(sigma(w, 7)).second);  // disjoint union
  }
  auto tensor = level_set(3, 7, WeightClass::tensor);
  CHECK(expect == std::set<BWeight>(tensor.begin(), tensor.end()));
}

TEST_CASE("u labels") {
  ULabel u = u_label(zero_weight(3), 7);
  CHECK(u.two_u == std::vector<int>{5, 3, 1});  // (5/2, 3/2, 1/2)
  CHECK(u.k() == 12);
  CHECK_FALSE(u.integer_entries());

  ULabel u0 = u0_label(zero_weight(3), 7);
  CHECK(u0.two_u == std::vector<int>{6, 4, 2});  // (3, 2, 1)
  CHECK(u0.eval_two_x() == std::vector<int>{5, 3, 1});  // u' - 1/2 matches u

  CHECK_THROWS_AS(u0_label(fundamental_weight(3, 3), 7), domain_error);  // spin weight
}

TEST_CASE("u label round trip and injectivity over full level sets") {
  for (int level : {7, 9}) {
    std::set<std::vector<int>> seen;
    for (const auto& w : level_set(3, level, WeightClass::all)) {
      ULabel u = u_label(w, level);
      CHECK(from_u_label(u) == w);
      CHECK(seen.insert(u.two_u).second);
      if (w.tensor_class()) {
        ULabel u0 = u0_label(w, level);
        CHECK(from_u_label(u0) == w);
      }
    }
  }
}

TEST_CASE("sigma on labels swaps u1 with k-u1") {
  for (const auto& w : level_set(3, 7, WeightClass::all)) {
    ULabel u = u_label(w, 7);
    ULabel su = u_label(sigma(w, 7), 7);
    CHECK(sigma(u) == su);
    std::vector<int> expect = u.two_u;
    expect[0] = 2 * u.k() - expect[0];
    std::sort(expect.begin(), expect.end(), std::greater<int>());
    CHECK(su.two_u == expect);
  }
}

TEST_CASE("orbit lengths") {
  int fixed = 0;
  for (const auto& w : level_set(3, 7, WeightClass::all)) {
    ULabel u = u_label(w, 7);
    OrbitClass oc = orbit_of(u);
    CHECK(oc.length == ((u.two_u[0] == u.k()) ? 1 : 2));
    if (oc.length == 1) {
      ++fixed;
      CHECK(sigma(u) == u);
    }
    CHECK(from_u_label(oc.rep).level() <= 7);
  }
  // 70 weights, C(6,3)+C(6,3) = 40 orbits: 10 fixed points and 30 free orbits
  CHECK(fixed == 10);
}

TEST_CASE("orbit representative families") {
  auto ints = orbit_reps_integer(3, 3);
  auto zeros = orbit_reps_zero(3, 3);
  CHECK(ints.size() == 20);
  CHECK(zeros.size() == 20);
  // each integer rep inverts to a spin-class weight, each zero rep to tensor
  for (const auto& u : ints) CHECK_FALSE(from_u_label(u).tensor_class());
  for (const auto& u : zeros) CHECK(from_u_label(u).tensor_class());
  // together they cover the level set orbits exactly once
  std::set<BWeight> covered;
  for (const auto& u : ints) {
    BWeight w = from_u_label(u);
    covered.insert(w);
    covered.insert(sigma(w, 7));
  }
  for (const auto& u : zeros) {
    BWeight w = from_u_label(u);
    covered.insert(w);
    covered.insert(sigma(w, 7));
  }
  CHECK(covered.size() == 70);
}

TEST_CASE("orbit bijection, integer labels") {
  ULabel u{3, 7, LabelKind::weight, {12, 4, 2}};  // (6,2,1)
  ULabel img = orbit_bijection_plus(u);
  CHECK(img.two_u == std::vector<int>{10, 8, 6});  // (5,4,3)
  CHECK(img.rank == 3);
  CHECK(img.level == 7);

  ULabel u2{3, 9, LabelKind::weight, {14, 12, 10}};  // (7,6,5), r=3 s=4
  CHECK(orbit_bijection_plus(u2).two_u == std::vector<int>{8, 6, 4, 2});

  for (const auto& rep : orbit_reps_integer(3, 3)) {
    ULabel img2 = orbit_bijection_plus(rep);
    CHECK(orbit_bijection_plus(img2) == rep);
  }
  CHECK_THROWS_AS(orbit_bijection_plus(ULabel{3, 7, LabelKind::weight, {14, 4, 2}}),
                  domain_error);  // entry outside [r+s]
}

TEST_CASE("orbit bijection, zero-class labels") {
  ULabel u{3, 7, LabelKind::zero_class, {6, 4, 2}};  // (3,2,1), r=s=3
  CHECK(orbit_bijection_zero(u).two_u == std::vector<int>{6, 4, 2});

  ULabel u2{3, 9, LabelKind::zero_class, {14, 4, 2}};  // (7,2,1), r=3 s=4
  CHECK(orbit_bijection_zero(u2).two_u == std::vector<int>{10, 8, 6, 4});  // (5,4,3,2)

  // vacuum goes to vacuum: (3,2,1) -> (4,3,2,1) for (r,s) = (3,4)
  ULabel vac = u0_label(zero_weight(3), 9);
  ULabel img = orbit_bijection_zero(vac);
  CHECK(img == u0_label(zero_weight(4), 7));

  for (const auto& rep : orbit_reps_zero(3, 4)) {
    ULabel img2 = orbit_bijection_zero(rep);
    CHECK(orbit_bijection_zero(img2) == rep);
  }
}
