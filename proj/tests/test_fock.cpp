#include <doctest.h>

#include <algorithm>
#include <string>

#include "soblocks/fock.hpp"

using namespace soblocks;

namespace {

const FockContext kCtx(3, 3);

FockVector one_mode(int j, int p, int two_a = -1) {
  return FockVector::monomial({Mode{j, p, two_a}});
}

// random vector: a few random monomials of bounded energy with +-1 coefficients
FockVector random_vector(SplitMix64& rng, int max_modes = 3) {
  FockVector v;
  int nmono = 1 + static_cast<int>(rng.below(2));
  for (int t = 0; t < nmono; ++t) {
    Monomial m;
    int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_modes + 1)));
    for (int i = 0; i < k; ++i) {
      Mode md{static_cast<int>(rng.range(-3, 3)), static_cast<int>(rng.range(-3, 3)),
              rng.below(2) ? -1 : -3};
      if (std::find(m.begin(), m.end(), md) == m.end()) m.push_back(md);
    }
    std::sort(m.begin(), m.end());
    v.add(m, rng.below(2) ? Rational(1) : Rational(-1));
  }
  return v;
}

Mode random_mode(SplitMix64& rng) {
  return Mode{static_cast<int>(rng.range(-3, 3)), static_cast<int>(rng.range(-3, 3)),
              2 * static_cast<int>(rng.range(-2, 1)) + 1};  // two_a in {-3,-1,1,3}
}

}  // namespace

TEST_CASE("clifford action basics") {
  CHECK(clifford_apply(Mode{1, 1, 1}, FockVector::vacuum(), kCtx).is_zero());
  FockVector v = clifford_apply(Mode{-1, -1, 1}, one_mode(1, 1), kCtx);
  CHECK(v == FockVector::vacuum());
  // exterior square
  CHECK(clifford_apply(Mode{1, 1, -1},
                       clifford_apply(Mode{1, 1, -1}, FockVector::vacuum(), kCtx), kCtx)
            .is_zero());
  // mismatched contraction dies
  CHECK(clifford_apply(Mode{-1, -2, 1}, one_mode(1, 1), kCtx).is_zero());
  CHECK_THROWS_AS(clifford_apply(Mode{4, 0, -1}, FockVector::vacuum(), kCtx), domain_error);
  CHECK_THROWS_AS(clifford_apply(Mode{1, 0, 2}, FockVector::vacuum(), kCtx), domain_error);
}

TEST_CASE("canonical anticommutation relations") {
  SplitMix64 rng(41);
  for (int t = 0; t < 60; ++t) {
    Mode m1 = random_mode(rng), m2 = random_mode(rng);
    FockVector v = random_vector(rng);
    FockVector lhs = clifford_apply(m1, clifford_apply(m2, v, kCtx), kCtx) +
                     clifford_apply(m2, clifford_apply(m1, v, kCtx), kCtx);
    bool pair = (m1.j == -m2.j && m1.p == -m2.p && m1.two_a == -m2.two_a);
    CHECK(lhs == (pair ? v : FockVector()));
  }
}

TEST_CASE("energy bound raises a resource error") {
  FockContext small_cap(3, 3);
  small_cap.max_two_energy = 2;
  FockVector v = one_mode(1, 1);
  CHECK_THROWS_AS(clifford_apply(Mode{2, 1, -3}, v, small_cap), resource_error);
}

TEST_CASE("current action: Cartan eigenvalue of one excitation") {
  FockVector v = one_mode(1, 1);
  CHECK(current_apply(CurrentOp{1, 1, 1, 1, 0}, v, kCtx) == v);
  CHECK(current_apply(CurrentOp{2, 2, 2, 2, 0}, v, kCtx).is_zero());
}

TEST_CASE("current vanishing instances at mode 1") {
  // B^{-1,-1}_{1,2}(1) kills phi^{1,1}(-1/2)
  CHECK(current_apply(CurrentOp{-1, -1, 1, 2, 1}, one_mode(1, 1), kCtx).is_zero());
  // any mode-0 or mode-1 current kills the vacuum
  CHECK(current_apply(CurrentOp{1, 2, -2, -1, 1}, FockVector::vacuum(), kCtx).is_zero());
  CHECK(current_apply(CurrentOp{1, 2, 3, 1, 0}, FockVector::vacuum(), kCtx).is_zero());
  // the two-step commutator display: B^{1,2}_{-2,-1}(1) B^{-1,-1}_{1,2}(-1) . 1 = 0
  FockVector phi3 = current_apply(CurrentOp{-1, -1, 1, 2, -1}, FockVector::vacuum(), kCtx);
  CHECK_FALSE(phi3.is_zero());
  CHECK(current_apply(CurrentOp{1, 2, -2, -1, 1}, phi3, kCtx).is_zero());
}

TEST_CASE("current of a matrix is basis-consistent") {
  // the map extends linearly from the B basis: so_from_current reproduces it
  SplitMix64 rng(99);
  for (int t = 0; t < 20; ++t) {
    int j = static_cast<int>(rng.range(-3, 3)), p = static_cast<int>(rng.range(-3, 3));
    int k = static_cast<int>(rng.range(-3, 3)), q = static_cast<int>(rng.range(-3, 3));
    int m = static_cast<int>(rng.range(-1, 1));
    FockVector v = random_vector(rng);
    CHECK(so_current_apply(so_from_current(j, p, k, q), m, v, kCtx) ==
          current_apply(CurrentOp{j, p, k, q, m}, v, kCtx));
  }
}

TEST_CASE("level-1 central term in a simple commutator") {
  // [X(1), Y(-1)] . 1 = (X, Y) . 1 for currents killing the vacuum at mode 0
  SoElement x = so_from_current(1, 1, 2, 2);
  SoElement y = so_from_current(2, 2, 1, 1);
  CHECK(so_invariant_form(x, y) == Rational(1));
  FockVector lhs =
      so_current_apply(x, 1, so_current_apply(y, -1, FockVector::vacuum(), kCtx), kCtx) -
      so_current_apply(y, -1, so_current_apply(x, 1, FockVector::vacuum(), kCtx), kCtx);
  CHECK(lhs == FockVector::vacuum());
}

TEST_CASE("currents form a level-1 representation") {
  SplitMix64 rng(7);
  for (int t = 0; t < 40; ++t) {
    int j = static_cast<int>(rng.range(-3, 3)), p = static_cast<int>(rng.range(-3, 3));
    int k = static_cast<int>(rng.range(-3, 3)), q = static_cast<int>(rng.range(-3, 3));
    int j2 = static_cast<int>(rng.range(-3, 3)), p2 = static_cast<int>(rng.range(-3, 3));
    int k2 = static_cast<int>(rng.range(-3, 3)), q2 = static_cast<int>(rng.range(-3, 3));
    int m = static_cast<int>(rng.range(-1, 1)), n = static_cast<int>(rng.range(-1, 1));
    SoElement x = so_from_current(j, p, k, q), y = so_from_current(j2, p2, k2, q2);
    FockVector v = random_vector(rng, 2);

    FockVector lhs = so_current_apply(x, m, so_current_apply(y, n, v, kCtx), kCtx) -
                     so_current_apply(y, n, so_current_apply(x, m, v, kCtx), kCtx);
    FockVector rhs = so_current_apply(so_commutator(x, y), m + n, v, kCtx);
    if (m + n == 0) rhs = rhs + v * (so_invariant_form(x, y) * m);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("subalgebra Cartans and raisings") {
  FockVector v = one_mode(1, 1);
  CHECK(subalgebra_apply(Side::left, 1, 1, 0, v, kCtx) == v);
  CHECK(subalgebra_apply(Side::right, 1, 1, 0, v, kCtx) == v);
  CHECK(subalgebra_apply(Side::left, 2, 2, 0, v, kCtx).is_zero());
  // raising operators annihilate the vacuum
  CHECK(subalgebra_apply(Side::left, 1, 2, 0, FockVector::vacuum(), kCtx).is_zero());
  CHECK(subalgebra_apply(Side::left, 3, 0, 0, FockVector::vacuum(), kCtx).is_zero());
  CHECK_THROWS_AS(subalgebra_apply(Side::left, 4, 4, 0, v, kCtx), domain_error);
}

TEST_CASE("highest-weight wedges") {
  CHECK(hwv_wedge(YoungDiagram(), Variant::plain, kCtx) == FockVector::vacuum());
  CHECK(hwv_wedge(YoungDiagram({1}), Variant::plain, kCtx) == one_mode(1, 1));
  // sigma-left grid of [1]: row 1 zeros at p in {3..0} and p = -2, -3
  FockVector sl = hwv_wedge(YoungDiagram({1}), Variant::sigma_left, kCtx);
  REQUIRE(sl.terms().size() == 1);
  const Monomial& m = sl.terms().begin()->first;
  CHECK(m.size() == 6);
  for (const auto& md : m) CHECK(md.j == 1);
  CHECK_THROWS_AS(hwv_wedge(YoungDiagram({4}), Variant::plain, kCtx), domain_error);
}

TEST_CASE("hwv verification across small diagrams and all variants") {
  for (const auto& y : diagrams_in_box(3, 3)) {
    if (y.size() > 2) continue;
    for (Variant var :
         {Variant::plain, Variant::sigma_left, Variant::sigma_right, Variant::sigma_both}) {
      FockVector v = hwv_wedge(y, var, kCtx);
      BWeight wl = young_to_weight(y, 3), wr = young_to_weight(transpose(y), 3);
      if (var == Variant::sigma_left || var == Variant::sigma_both) wl = sigma(wl, 7);
      if (var == Variant::sigma_right || var == Variant::sigma_both) wr = sigma(wr, 7);
      HwvReport rep = verify_hwv(v, wl, wr, kCtx);
      CHECK_MESSAGE(rep.pass, (to_string(y) + " variant " + std::to_string(static_cast<int>(var))));
    }
  }
}

TEST_CASE("hwv energy equals half the box count") {
  for (const auto& y : diagrams_in_box(3, 3)) {
    FockVector v = hwv_wedge(y, Variant::plain, kCtx);
    CHECK(v.homogeneous_two_energy() == y.size());
    CHECK(v.homogeneous_parity() == y.size() % 2);
  }
}

TEST_CASE("failure reporting names the violated generator") {
  // the vacuum is not a highest-weight vector for (omega_1, omega_1)
  HwvReport rep = verify_hwv(FockVector::vacuum(), fundamental_weight(3, 1),
                             fundamental_weight(3, 1), kCtx);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("two-box ladders") {
  {
    auto res = kacmoody_build(YoungDiagram({1, 1}), {{1, 1, 2, 1}}, kCtx);
    CHECK(res.proportional);
    CHECK(res.scalar != 0);
    CHECK(res.vector == hwv_wedge(YoungDiagram({1, 1}), Variant::plain, kCtx) * res.scalar);
  }
  {
    auto res = kacmoody_build(YoungDiagram({2}), {{1, 1, 1, 2}}, kCtx);
    CHECK(res.proportional);
  }
  CHECK(kacmoody_build(YoungDiagram(), {}, kCtx).vector == FockVector::vacuum());
  CHECK(kacmoody_build(YoungDiagram({1}), {}, kCtx).vector == one_mode(1, 1));

  // canonical sequences for every diagram up to four boxes
  for (const auto& y : diagrams_in_box(3, 3)) {
    if (y.size() > 4) continue;
    auto res = kacmoody_build(y, box_pair_sequence(y), kCtx);
    CHECK_MESSAGE(res.proportional, to_string(y).c_str());
    CHECK(res.scalar != 0);
  }

  CHECK_THROWS_AS(kacmoody_build(YoungDiagram({2}), {{1, 2, 1, 1}}, kCtx), domain_error);
  CHECK_THROWS_AS(kacmoody_build(YoungDiagram({2}), {{1, 1, 2, 1}}, kCtx), domain_error);
  CHECK_THROWS_AS(kacmoody_build(YoungDiagram({2, 2}), {{1, 1, 1, 2}}, kCtx), domain_error);
}

TEST_CASE("mode-1 vanishing on lowest vectors") {
  for (const auto& y : diagrams_in_box(3, 3)) {
    if (y.size() % 2 != 0 || y.size() == 0 || y.size() > 4) continue;
    auto seq = box_pair_sequence(y);
    REQUIRE(!seq.empty());
    auto last = seq.back();
    FockVector phi3 = lowest_wedge(y, kCtx);
    // addable boxes of y inside the box grid
    auto rows = y.rows();
    rows.resize(3, 0);
    for (int i = 1; i <= 3; ++i) {
      int next = rows[static_cast<std::size_t>(i - 1)] + 1;
      if (next > 3) continue;
      if (i > 1 && rows[static_cast<std::size_t>(i - 2)] < next) continue;
      CHECK(verify_gauge_vanishing(last[0], last[1], i, next, phi3, kCtx));
      CHECK(verify_gauge_vanishing(last[2], last[3], i, next, phi3, kCtx));
    }
  }
}

TEST_CASE("asymmetric box: hwv, ladders, and vanishing at (r,s) = (3,4)") {
  FockContext ctx34(3, 4);
  for (const auto& y : {YoungDiagram(), YoungDiagram({1}), YoungDiagram({4}),
                        YoungDiagram({2, 1}), YoungDiagram({4, 1, 1}), YoungDiagram({2, 2, 2})}) {
    for (Variant var : {Variant::plain, Variant::sigma_left, Variant::sigma_right,
                        Variant::sigma_both}) {
      FockVector v = hwv_wedge(y, var, ctx34);
      BWeight wl = young_to_weight(y, 3), wr = young_to_weight(transpose(y), 4);
      if (var == Variant::sigma_left || var == Variant::sigma_both) wl = sigma(wl, 9);
      if (var == Variant::sigma_right || var == Variant::sigma_both) wr = sigma(wr, 7);
      HwvReport rep = verify_hwv(v, wl, wr, ctx34);
      CHECK_MESSAGE(rep.pass, (to_string(y) + " variant " + std::to_string(static_cast<int>(var))));
    }
  }
  auto res = kacmoody_build(YoungDiagram({4, 1, 1}), box_pair_sequence(YoungDiagram({4, 1, 1})),
                            ctx34);
  CHECK(res.proportional);
  CHECK(verify_gauge_vanishing(1, 4, 2, 2, lowest_wedge(YoungDiagram({4, 1, 1}), ctx34), ctx34));
}

TEST_CASE("degree-1/2 pairing") {
  CHECK(q_pair(one_mode(1, 1), one_mode(-1, -1)) == Rational(1));
  CHECK(q_pair(one_mode(1, 1), one_mode(1, 1)) == Rational(0));
  CHECK(q_pair(one_mode(-2, 1), one_mode(2, -1)) == Rational(1));
  FockVector u = one_mode(1, 1) * Rational(2) + one_mode(2, 3) * Rational(3);
  FockVector v = one_mode(-1, -1) * Rational(5) + one_mode(-2, -3) * Rational(7, 2);
  CHECK(q_pair(u, v) == Rational(2) * 5 + Rational(3) * Rational(7, 2));
  CHECK_THROWS_AS(q_pair(FockVector::vacuum(), one_mode(1, 1)), domain_error);
  CHECK_THROWS_AS(q_pair(one_mode(1, 1, -3), one_mode(-1, -1)), domain_error);
}
