#pragma once

#include <optional>
#include <string>

#include "wex/core/category.hpp"
#include "wex/core/exactness.hpp"
#include "wex/engine/steps.hpp"

namespace wex::engine {

/// A1 --a1--> A2 --a2--> A3
/// |f1        |f2        |f3
/// B1 --b1--> B2 --b2--> B3
/// |g1        |g2        |g3
/// C1 --c1--> C2 --c2--> C3
template <class M>
struct Grid3x3 {
  M a1, a2;
  M b1, b2;
  M c1, c2;
  M f1, f2, f3;
  M g1, g2, g3;
};

/// Throws HypothesisViolation unless the four squares commute.
template <WeaklyExactCategory C>
void check_grid_commutes(const C& cat, const Grid3x3<MorphismOf<C>>& g) {
  require_commutes(cat, g.f2, g.a1, g.b1, g.f1, "upper left square does not commute");
  require_commutes(cat, g.f3, g.a2, g.b2, g.f2, "upper right square does not commute");
  require_commutes(cat, g.g2, g.b1, g.c1, g.g1, "lower left square does not commute");
  require_commutes(cat, g.g3, g.b2, g.c2, g.g2, "lower right square does not commute");
}

/// The two upper rows of a grid whose verticals are deflations.
template <class M>
struct KernelGridInput {
  M phi1, phi2;    // A1 -> A2 -> A3
  M phi1p, phi2p;  // B1 -> B2 -> B3
  M f1, f2, f3;
};

template <class M>
struct KernelSequenceResult {
  M k1, k2, k3;
  M psi1, psi2;
  CheckReport verdict;

  /// Pullback route; absent when the instance has no pullbacks or when one of
  /// the pullback axioms fails on this input (then `path_b_unavailable` says why).
  std::optional<M> psi1_b, psi2_b;
  std::optional<CheckReport> verdict_b;
  std::string path_b_unavailable;
  bool paths_agree = false;
};

/// Induced sequence of kernels K1 -> K2 -> K3 of a map of short exact
/// sequences with deflation verticals, computed directly and, when pullbacks
/// are available, through the pullback of phi2' along f3.
template <WeaklyExactCategory C>
KernelSequenceResult<MorphismOf<C>> induced_kernel_sequence(const C& cat, const KernelGridInput<MorphismOf<C>>& d) {
  using M = MorphismOf<C>;
  require_short_exact(cat, d.phi1, d.phi2, "top row not short exact");
  require_short_exact(cat, d.phi1p, d.phi2p, "bottom row not short exact");
  if (!cat.is_deflation(d.f1)) throw HypothesisViolation("f1 not a deflation", cat.describe(d.f1));
  if (!cat.is_deflation(d.f2)) throw HypothesisViolation("f2 not a deflation", cat.describe(d.f2));
  if (!cat.is_deflation(d.f3)) throw HypothesisViolation("f3 not a deflation", cat.describe(d.f3));
  require_commutes(cat, d.f2, d.phi1, d.phi1p, d.f1, "left square does not commute");
  require_commutes(cat, d.f3, d.phi2, d.phi2p, d.f2, "right square does not commute");

  const M k1 = cat.kernel(d.f1);
  const M k2 = cat.kernel(d.f2);
  const M k3 = cat.kernel(d.f3);
  const M phi1_k1 = cat.compose(d.phi1, k1);
  const M psi1 = step("psi1", [&] { return cat.kernel_lift(d.f2, k2, phi1_k1); });
  const M psi2 = step("psi2", [&] { return cat.kernel_lift(d.f3, k3, cat.compose(d.phi2, k2)); });
  KernelSequenceResult<M> r{k1, k2, k3, psi1, psi2, check_short_exact(cat, psi1, psi2), {}, {}, {}, {}, false};

  if constexpr (HasPullbacks<C>) {
    // P = B2 x_B3 A3 with legs pi2: P -> B2 and phi2'': P -> A3.
    const auto sq = cat.pullback_of_deflation(d.phi2p, d.f3);
    const M& pi2 = sq.first;
    const M pi1 = step("pi1", [&] { return cat.pullback_lift(sq, d.f2, d.phi2); });
    const M k3p = step("k3'", [&] {
      return cat.pullback_lift(sq, zero_morphism(cat, cat.source(k3), cat.source(d.phi2p)), k3);
    });
    if (!cat.is_deflation(pi2)) {
      r.path_b_unavailable = "base change of phi2' along f3 is not a deflation";
      return r;
    }
    if (!check_short_exact(cat, phi1_k1, pi1)) {
      r.path_b_unavailable = "A2 -> P is not a deflation with kernel K1";
      return r;
    }
    if (!check_short_exact(cat, k3p, pi2)) {
      r.path_b_unavailable = "K3 -> P is not a kernel of P -> B2";
      return r;
    }
    const M psi2_b = step("psi2 via P", [&] { return cat.kernel_lift(pi2, k3p, cat.compose(pi1, k2)); });
    // K1 is the kernel of pi1; lift it into K2.
    const M n = cat.kernel(pi1);
    const M k1_to_n = step("K1 -> ker(pi1)", [&] { return cat.kernel_lift(pi1, n, phi1_k1); });
    const M psi1_b = step("psi1 via P", [&] { return cat.kernel_lift(d.f2, k2, cat.compose(n, k1_to_n)); });
    r.psi1_b = psi1_b;
    r.psi2_b = psi2_b;
    r.verdict_b = check_short_exact(cat, psi1_b, psi2_b);
    r.paths_agree = cat.equal(psi1, psi1_b) && cat.equal(psi2, psi2_b);
  } else {
    r.path_b_unavailable = "instance has no pullbacks";
  }
  return r;
}

template <class M>
struct DualThreeByThreeResult {
  CheckReport verdict;  // third column
  M kernel;             // A3' -> B3, kernel of g3
  M lift;               // A2 -> A3'
  M iso;                // A3 -> A3'
  M iso_inverse;
};

/// With short exact rows and first two columns short exact, the third column
/// is short exact; A3 is compared with the kernel A3' of g3.
template <WeaklyExactCategory C>
DualThreeByThreeResult<MorphismOf<C>> three_by_three_dual(const C& cat, const Grid3x3<MorphismOf<C>>& g) {
  using M = MorphismOf<C>;
  require_short_exact(cat, g.a1, g.a2, "first row not short exact");
  require_short_exact(cat, g.b1, g.b2, "second row not short exact");
  require_short_exact(cat, g.c1, g.c2, "third row not short exact");
  require_short_exact(cat, g.f1, g.g1, "first column not short exact");
  require_short_exact(cat, g.f2, g.g2, "second column not short exact");
  check_grid_commutes(cat, g);
  if (!composable(cat, g.g3, g.f3)) throw HypothesisViolation("third column not composable", cat.describe(g.f3));

  expect_deflation(cat, g.g3, "B3 -> C3 deflation");
  const M k = cat.kernel(g.g3);
  const M lift = step("A2 -> A3'", [&] { return cat.kernel_lift(g.g3, k, cat.compose(g.b2, g.f2)); });
  expect_short_exact(cat, g.a1, lift, "A1 -> A2 -> A3' short exact");
  const M iso = step("A3 -> A3'", [&] { return cat.cokernel_colift(g.a1, g.a2, lift); });
  const M inv = step("A3' -> A3", [&] { return cat.cokernel_colift(g.a1, lift, g.a2); });
  if (!are_inverse(cat, iso, inv)) throw ConclusionFailure("A3 = A3'", "comparison maps are not inverse");
  expect_equal(cat, cat.compose(k, iso), g.f3, "A3 -> A3' -> B3 = f3");
  return {check_short_exact(cat, g.f3, g.g3), k, lift, iso, inv};
}

template <class M>
struct FullThreeByThreeResult {
  CheckReport verdict;  // middle row
  M theta1;             // A3 -> P
  M theta2;             // P -> C2
  M psi1;               // B2 -> P
  M psi2;               // P -> B3
  M kernel;             // B1' -> B2, kernel of phi2'
  M f1p;                // A1 -> B1'
  M g1p;                // B1' -> C1
  M psi;                // B1 -> B1', an isomorphism
  M psi_inverse;
};

/// Columns and outer rows short exact and b2 b1 = 0 imply the middle row is
/// short exact; uses pullbacks of deflations.
template <HasPullbacks C>
FullThreeByThreeResult<MorphismOf<C>> full_three_by_three(const C& cat, const Grid3x3<MorphismOf<C>>& g) {
  using M = MorphismOf<C>;
  require_short_exact(cat, g.f1, g.g1, "first column not short exact");
  require_short_exact(cat, g.f2, g.g2, "second column not short exact");
  require_short_exact(cat, g.f3, g.g3, "third column not short exact");
  require_short_exact(cat, g.a1, g.a2, "first row not short exact");
  require_short_exact(cat, g.c1, g.c2, "third row not short exact");
  check_grid_commutes(cat, g);
  if (!composable(cat, g.b2, g.b1) || !is_zero_morphism(cat, cat.compose(g.b2, g.b1))) {
    throw HypothesisViolation("middle row composite not zero", cat.describe(g.b2));
  }

  // P = C2 x_C3 B3 with legs theta2: P -> C2 and psi2: P -> B3.
  const auto sq = step("pullback", [&] { return cat.pullback_of_deflation(g.c2, g.g3); });
  const M& theta2 = sq.first;
  const M& psi2 = sq.second;
  const M theta1 = step("theta1", [&] {
    return cat.pullback_lift(sq, zero_morphism(cat, cat.source(g.f3), cat.source(g.c2)), g.f3);
  });
  const M psi1 = step("psi1", [&] { return cat.pullback_lift(sq, g.g2, g.b2); });
  expect_short_exact(cat, theta1, theta2, "A3 -> P -> C2 short exact");
  expect_deflation(cat, psi2, "P -> B3 deflation");
  expect_deflation(cat, psi1, "B2 -> P deflation");
  expect_deflation(cat, g.b2, "B2 -> B3 deflation");

  const M kernel = cat.kernel(g.b2);
  const M f1p = step("A1 -> B1'", [&] { return cat.kernel_lift(g.b2, kernel, cat.compose(g.f2, g.a1)); });
  const M g1p = step("B1' -> C1", [&] { return cat.kernel_lift(g.c2, g.c1, cat.compose(g.g2, kernel)); });
  expect_short_exact(cat, f1p, g1p, "A1 -> B1' -> C1 short exact");
  const M psi = step("B1 -> B1'", [&] { return cat.kernel_lift(g.b2, kernel, g.b1); });
  expect_equal(cat, cat.compose(psi, g.f1), f1p, "psi f1 = f1'");
  expect_equal(cat, cat.compose(g1p, psi), g.g1, "g1' psi = g1");
  expect_deflation(cat, psi, "B1 -> B1' deflation");
  if (!is_isomorphism(cat, psi)) throw ConclusionFailure("B1 -> B1' isomorphism", "kernel is not zero");
  const M psi_inverse = inverse(cat, psi);

  return {check_short_exact(cat, g.b1, g.b2), theta1, theta2, psi1, psi2, kernel, f1p, g1p, psi, psi_inverse};
}

}  // namespace wex::engine
