#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wex/core/category.hpp"
#include "wex/core/exactness.hpp"
#include "wex/engine/steps.hpp"

namespace wex::engine {

/// Two short exact rows joined by admissible verticals:
///
///   A1 --phi1--> A2 --phi2--> A3
///   |f1          |f2          |f3
///   B1 --phi1'-> B2 --phi2'-> B3
template <class M>
struct SnakeDiagram {
  M phi1, phi2;
  M phi1p, phi2p;
  AdmissibleFactorization<M> f1, f2, f3;
};

/// The six-term sequence K1 -> K2 -> K3 -> C1 -> C2 -> C3 together with the
/// intermediate objects and maps of its construction.
template <class M>
struct SnakeResult {
  M psi1, psi2, delta, psi1p, psi2p;

  M phi2pp;    // I2 -> I3
  M phi1pp;    // J1 -> I2, kernel of phi2pp
  M epsilon;   // J1 -> B1
  M i;         // ker(psi2') -> C2
  M c2p;       // B1 -> ker(psi2')
  M alpha;     // C1 -> ker(psi2')
  M ip;        // ker(psi1') -> C1, kernel of alpha
  M epsilonp;  // I1 -> J1
  M j;         // J1 -> ker(psi1')
  M pi1;       // P -> A2, kernel of f3' phi2
  M theta1;    // A1 -> P
  M theta2;    // P -> K3
  M k2p;       // K2 -> P
  M p;         // P -> J1
  M deltap;    // K3 -> ker(psi1')
  M l;         // ker(delta') -> K3
  M q;         // K2 -> ker(delta')

  std::vector<M> sequence;
  std::vector<AdmissibleFactorization<M>> factorizations;
  LongExactReport exactness;
  bool psi1_inflation = false;
  bool psi2p_deflation = false;
};

/// Builds the diagram from plain verticals using the instance factorization.
template <HasAdmissibleFactorization C>
SnakeDiagram<MorphismOf<C>> make_snake_diagram(const C& cat, const MorphismOf<C>& phi1, const MorphismOf<C>& phi2,
                                               const MorphismOf<C>& phi1p, const MorphismOf<C>& phi2p,
                                               const MorphismOf<C>& f1, const MorphismOf<C>& f2,
                                               const MorphismOf<C>& f3) {
  auto factor = [&](const MorphismOf<C>& f, const char* name) {
    auto fac = cat.admissible_factorization(f);
    if (!fac) throw HypothesisViolation(std::string(name) + " not admissible", cat.describe(f));
    return *fac;
  };
  return {phi1, phi2, phi1p, phi2p, factor(f1, "f1"), factor(f2, "f2"), factor(f3, "f3")};
}

/// Checks the hypotheses of the snake construction; throws HypothesisViolation
/// naming the first failing clause.
template <WeaklyExactCategory C>
void check_snake_hypotheses(const C& cat, const SnakeDiagram<MorphismOf<C>>& d) {
  require_short_exact(cat, d.phi1, d.phi2, "top row not short exact");
  require_short_exact(cat, d.phi1p, d.phi2p, "bottom row not short exact");
  const AdmissibleFactorization<MorphismOf<C>>* facs[] = {&d.f1, &d.f2, &d.f3};
  for (int n = 0; n < 3; ++n) {
    const std::string name = "f" + std::to_string(n + 1) + " not admissible";
    const auto& f = *facs[n];
    if (!composable(cat, f.inflation_part, f.deflation_part) || !composable(cat, f.deflation_part, f.kernel) ||
        !composable(cat, f.cokernel, f.inflation_part)) {
      throw HypothesisViolation(name, "factorization maps are not composable");
    }
    const CheckReport r = check_factorization(cat, f);
    if (!r) throw HypothesisViolation(name, r.clause);
  }
  require_commutes(cat, d.f2.morphism, d.phi1, d.phi1p, d.f1.morphism, "left square does not commute");
  require_commutes(cat, d.f3.morphism, d.phi2, d.phi2p, d.f2.morphism, "right square does not commute");
}

/// The connecting morphism and six-term exact sequence, following the
/// element-free construction: delta = i' delta' with delta' the colift through
/// theta2 of j p.
template <WeaklyExactCategory C>
SnakeResult<MorphismOf<C>> snake(const C& cat, const SnakeDiagram<MorphismOf<C>>& d) {
  using M = MorphismOf<C>;
  check_snake_hypotheses(cat, d);
  const M& f1p = d.f1.deflation_part;
  const M& f1pp = d.f1.inflation_part;
  const M& k1 = d.f1.kernel;
  const M& c1 = d.f1.cokernel;
  const M& f2p = d.f2.deflation_part;
  const M& f2pp = d.f2.inflation_part;
  const M& k2 = d.f2.kernel;
  const M& c2 = d.f2.cokernel;
  const M& f3p = d.f3.deflation_part;
  const M& f3pp = d.f3.inflation_part;
  const M& k3 = d.f3.kernel;
  const M& c3 = d.f3.cokernel;

  const M psi1 = step("psi1", [&] { return cat.kernel_lift(f2p, k2, cat.compose(d.phi1, k1)); });
  const M psi2 = step("psi2", [&] { return cat.kernel_lift(f3p, k3, cat.compose(d.phi2, k2)); });
  const M psi1p = step("psi1'", [&] { return cat.cokernel_colift(f1pp, c1, cat.compose(c2, d.phi1p)); });
  const M psi2p = step("psi2'", [&] { return cat.cokernel_colift(f2pp, c2, cat.compose(c3, d.phi2p)); });
  expect_deflation(cat, psi2p, "psi2' deflation");

  // phi2'': I2 -> I3 with phi2'' f2' = f3' phi2 and f3'' phi2'' = phi2' f2''.
  const M phi2pp = step("phi2''", [&] { return cat.cokernel_colift(k2, f2p, cat.compose(f3p, d.phi2)); });
  expect_equal(cat, cat.compose(f3pp, phi2pp), cat.compose(d.phi2p, f2pp), "phi2'' lower square");
  expect_deflation(cat, phi2pp, "phi2'' deflation");
  const M phi1pp = cat.kernel(phi2pp);

  // J1 -> B1 -> ker(psi2') is short exact.
  const M epsilon = step("epsilon", [&] { return cat.kernel_lift(d.phi2p, d.phi1p, cat.compose(f2pp, phi1pp)); });
  const M i = cat.kernel(psi2p);
  const M c2p = step("c2'", [&] { return cat.kernel_lift(psi2p, i, cat.compose(c2, d.phi1p)); });
  expect_short_exact(cat, epsilon, c2p, "J1 -> B1 -> ker(psi2') short exact");

  // alpha: C1 -> ker(psi2'), a deflation since alpha c1 = c2'.
  const M alpha = step("alpha", [&] { return cat.kernel_lift(psi2p, i, psi1p); });
  expect_equal(cat, cat.compose(alpha, c1), c2p, "alpha c1 = c2'");
  expect_deflation(cat, alpha, "alpha deflation");
  const M ip = cat.kernel(alpha);

  // I1 -> J1 -> ker(psi1') is short exact.
  const M epsilonp = step("epsilon'", [&] { return cat.kernel_lift(c2p, epsilon, f1pp); });
  const M j = step("j", [&] { return cat.kernel_lift(alpha, ip, cat.compose(c1, epsilon)); });
  expect_short_exact(cat, epsilonp, j, "I1 -> J1 -> ker(psi1') short exact");

  // P = ker(f3' phi2) with the two short exact rows through it.
  const M f3p_phi2 = cat.compose(f3p, d.phi2);
  const M pi1 = cat.kernel(f3p_phi2);
  const M theta1 = step("theta1", [&] { return cat.kernel_lift(f3p_phi2, pi1, d.phi1); });
  const M theta2 = step("theta2", [&] { return cat.kernel_lift(f3p, k3, cat.compose(d.phi2, pi1)); });
  expect_short_exact(cat, theta1, theta2, "A1 -> P -> K3 short exact");
  const M k2p = step("k2'", [&] { return cat.kernel_lift(f3p_phi2, pi1, k2); });
  const M p = step("p", [&] { return cat.kernel_lift(phi2pp, phi1pp, cat.compose(f2p, pi1)); });
  expect_short_exact(cat, k2p, p, "K2 -> P -> J1 short exact");
  expect_equal(cat, cat.compose(p, theta1), cat.compose(epsilonp, f1p), "p theta1 = epsilon' f1'");

  const M deltap = step("delta'", [&] { return cat.cokernel_colift(theta1, theta2, cat.compose(j, p)); });
  expect_deflation(cat, deltap, "delta' deflation");
  const M delta = cat.compose(ip, deltap);

  const M l = cat.kernel(deltap);
  const M q = step("K2 -> ker(delta')", [&] { return cat.kernel_lift(deltap, l, psi2); });
  expect_equal(cat, cat.compose(l, q), psi2, "psi2 factors through ker(delta')");

  SnakeResult<M> r{psi1,     psi2, delta,  psi1p, psi2p, phi2pp, phi1pp, epsilon, i,      c2p, alpha,
                   ip,       epsilonp, j,  pi1,   theta1, theta2, k2p,   p,       deltap, l,   q,
                   {},       {},       {}};
  const auto k1obj = cat.source(psi1);
  const auto c3obj = cat.target(psi2p);
  r.sequence = {psi1, psi2, delta, psi1p, psi2p};
  r.factorizations = {
      {psi1, cat.identity(k1obj), psi1, cat.from_zero(k1obj), q},
      {psi2, q, l, psi1, deltap},
      {delta, deltap, ip, l, alpha},
      {psi1p, alpha, i, ip, psi2p},
      {psi2p, psi2p, cat.identity(c3obj), i, cat.to_zero(c3obj)},
  };
  r.exactness = check_long_exact(cat, r.sequence, r.factorizations);
  r.psi1_inflation = static_cast<bool>(check_short_exact(cat, psi1, q));
  r.psi2p_deflation = cat.is_deflation(psi2p);
  return r;
}

/// Induced map ker(f) -> ker(g) of a square g alpha = beta f.
template <WeaklyExactCategory C>
MorphismOf<C> induced_on_kernels(const C& cat, const AdmissibleFactorization<MorphismOf<C>>& f,
                                 const AdmissibleFactorization<MorphismOf<C>>& g, const MorphismOf<C>& alpha) {
  return cat.kernel_lift(g.deflation_part, g.kernel, checked_compose(cat, alpha, f.kernel));
}

/// Induced map coker(f) -> coker(g) of a square g alpha = beta f.
template <WeaklyExactCategory C>
MorphismOf<C> induced_on_cokernels(const C& cat, const AdmissibleFactorization<MorphismOf<C>>& f,
                                   const AdmissibleFactorization<MorphismOf<C>>& g, const MorphismOf<C>& beta) {
  return cat.cokernel_colift(f.inflation_part, f.cokernel, checked_compose(cat, g.cokernel, beta));
}

/// A morphism between snake diagrams: a_k: A_k -> A_k', b_k: B_k -> B_k'.
template <class M>
struct SnakeMorphism {
  M a1, a2, a3, b1, b2, b3;
};

template <WeaklyExactCategory C>
void check_snake_morphism(const C& cat, const SnakeDiagram<MorphismOf<C>>& d, const SnakeDiagram<MorphismOf<C>>& e,
                          const SnakeMorphism<MorphismOf<C>>& m) {
  require_commutes(cat, e.phi1, m.a1, m.a2, d.phi1, "top left face does not commute");
  require_commutes(cat, e.phi2, m.a2, m.a3, d.phi2, "top right face does not commute");
  require_commutes(cat, e.phi1p, m.b1, m.b2, d.phi1p, "bottom left face does not commute");
  require_commutes(cat, e.phi2p, m.b2, m.b3, d.phi2p, "bottom right face does not commute");
  require_commutes(cat, e.f1.morphism, m.a1, m.b1, d.f1.morphism, "first vertical face does not commute");
  require_commutes(cat, e.f2.morphism, m.a2, m.b2, d.f2.morphism, "second vertical face does not commute");
  require_commutes(cat, e.f3.morphism, m.a3, m.b3, d.f3.morphism, "third vertical face does not commute");
}

/// Outcome of the naturality square of delta for a morphism of diagrams.
template <class M>
struct NaturalityReport {
  bool commutes = false;
  M kernel_map;    // K3 -> K3'
  M cokernel_map;  // C1 -> C1'
  M lhs;           // delta_e o kernel_map
  M rhs;           // cokernel_map o delta_d
};

template <WeaklyExactCategory C>
NaturalityReport<MorphismOf<C>> delta_naturality(const C& cat, const SnakeDiagram<MorphismOf<C>>& d,
                                                 const SnakeDiagram<MorphismOf<C>>& e,
                                                 const SnakeMorphism<MorphismOf<C>>& m) {
  check_snake_morphism(cat, d, e, m);
  const auto sd = snake(cat, d);
  const auto se = snake(cat, e);
  const auto kmap = induced_on_kernels(cat, d.f3, e.f3, m.a3);
  const auto cmap = induced_on_cokernels(cat, d.f1, e.f1, m.b1);
  const auto lhs = cat.compose(se.delta, kmap);
  const auto rhs = cat.compose(cmap, sd.delta);
  return {cat.equal(lhs, rhs), kmap, cmap, lhs, rhs};
}

/// Witnesses that f is an inflation when g and g f are, given the short exact
/// sequences B -g-> C -p-> D and A -gf-> C -q-> D'.
template <class M>
struct InflationCancellation {
  M p_prime;  // D' -> D, deflation with p' q = p
  M n;        // ker(p') -> D'
  M m;        // B -> ker(p'), cokernel of f
};

template <WeaklyExactCategory C>
InflationCancellation<MorphismOf<C>> inflation_cancellation(const C& cat, const MorphismOf<C>& f,
                                                            const MorphismOf<C>& g, const MorphismOf<C>& p,
                                                            const MorphismOf<C>& q) {
  using M = MorphismOf<C>;
  if (!composable(cat, g, f)) throw HypothesisViolation("f, g not composable", cat.describe(f));
  require_short_exact(cat, g, p, "g not an inflation with cokernel p");
  const M gf = cat.compose(g, f);
  require_short_exact(cat, gf, q, "gf not an inflation with cokernel q");
  const M p_prime = step("p'", [&] { return cat.cokernel_colift(gf, q, p); });
  expect_equal(cat, cat.compose(p_prime, q), p, "p' q = p");
  expect_deflation(cat, p_prime, "p' deflation");
  const M n = cat.kernel(p_prime);
  const M m = step("B -> ker(p')", [&] { return cat.kernel_lift(p_prime, n, cat.compose(q, g)); });
  expect_short_exact(cat, f, m, "A -> B -> ker(p') short exact");
  return {p_prime, n, m};
}

/// Same, with p and q taken as the instance cokernels of g and g f.
template <WeaklyExactCategory C>
InflationCancellation<MorphismOf<C>> inflation_cancellation(const C& cat, const MorphismOf<C>& f,
                                                            const MorphismOf<C>& g) {
  if (!composable(cat, g, f)) throw HypothesisViolation("f, g not composable", cat.describe(f));
  return inflation_cancellation(cat, f, g, cat.cokernel(g), cat.cokernel(cat.compose(g, f)));
}

/// Six-term sequence K1' -> K2 -> K3 -> C1 -> C2 -> C3' obtained by
/// precomposing phi1 with a deflation a: A1' -> A1 and postcomposing phi2'
/// with an inflation b: B3 -> B3'.
template <class M>
struct ExtendedSnakeResult {
  SnakeResult<M> base;
  M k1_ext;    // K1' -> A1', kernel of f1 a
  M v;         // K1' -> K1, deflation
  M c3_ext;    // B3' -> C3', cokernel of b f3
  M u;         // C3 -> C3', inflation
  M u_cokernel;  // C3' -> coker(u)
  std::vector<M> sequence;
  std::vector<AdmissibleFactorization<M>> factorizations;
  LongExactReport exactness;
};

template <WeaklyExactCategory C>
ExtendedSnakeResult<MorphismOf<C>> snake_extended(const C& cat, const SnakeDiagram<MorphismOf<C>>& d,
                                                  const MorphismOf<C>& a, const MorphismOf<C>& b) {
  using M = MorphismOf<C>;
  if (!cat.same_object(cat.target(a), cat.source(d.phi1))) {
    throw HypothesisViolation("a does not end at A1", cat.describe(a));
  }
  if (!cat.same_object(cat.source(b), cat.target(d.phi2p))) {
    throw HypothesisViolation("b does not start at B3", cat.describe(b));
  }
  if (!cat.is_deflation(a)) throw HypothesisViolation("a not a deflation", cat.describe(a));
  if (!is_inflation(cat, b)) throw HypothesisViolation("b not an inflation", cat.describe(b));
  const M b_f3pp = cat.compose(b, d.f3.inflation_part);
  if (!is_inflation(cat, b_f3pp)) {
    throw HypothesisViolation("A3 -> B3' not admissible", "b f3'' is not an inflation");
  }

  SnakeResult<M> base = snake(cat, d);

  // f1 a = f1'' (f1' a) with f1' a a deflation.
  const M f1p_a = cat.compose(d.f1.deflation_part, a);
  expect_deflation(cat, f1p_a, "f1' a deflation");
  const M k1_ext = cat.kernel(f1p_a);
  const M v = step("K1' -> K1", [&] { return cat.kernel_lift(d.f1.deflation_part, d.f1.kernel, cat.compose(a, k1_ext)); });
  expect_deflation(cat, v, "K1' -> K1 deflation");

  const M c3_ext = cat.cokernel(b_f3pp);
  expect_short_exact(cat, b_f3pp, c3_ext, "I3 -> B3' -> C3' short exact");
  const M u = step("C3 -> C3'", [&] { return cat.cokernel_colift(d.f3.inflation_part, d.f3.cokernel, cat.compose(c3_ext, b)); });
  // u is an inflation: cancel b against b f3'' and identify C3 with ker(p').
  const auto cancel = inflation_cancellation(cat, d.f3.inflation_part, b, cat.cokernel(b), c3_ext);
  const M to_kernel = step("C3 -> ker(p')", [&] { return cat.cokernel_colift(d.f3.inflation_part, d.f3.cokernel, cancel.m); });
  const M back = step("ker(p') -> C3", [&] { return cat.cokernel_colift(d.f3.inflation_part, cancel.m, d.f3.cokernel); });
  if (!are_inverse(cat, to_kernel, back)) throw ConclusionFailure("C3 = ker(p')", "comparison maps are not inverse");
  expect_equal(cat, cat.compose(cancel.n, to_kernel), u, "C3 -> C3' factors through ker(p')");
  expect_short_exact(cat, u, cancel.p_prime, "C3 -> C3' inflation");

  ExtendedSnakeResult<M> r{base, k1_ext, v, c3_ext, u, cancel.p_prime, {}, {}, {}};
  const M first = cat.compose(base.psi1, v);
  const M last = cat.compose(u, base.psi2p);
  r.sequence = {first, base.psi2, base.delta, base.psi1p, last};
  r.factorizations = {
      {first, v, base.psi1, cat.kernel(v), base.q},
      base.factorizations[1],
      base.factorizations[2],
      base.factorizations[3],
      {last, base.psi2p, u, base.i, cancel.p_prime},
  };
  r.exactness = check_long_exact(cat, r.sequence, r.factorizations);
  return r;
}

}  // namespace wex::engine
