#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wex/core/category.hpp"
#include "wex/core/exactness.hpp"
#include "wex/engine/snake.hpp"
#include "wex/engine/steps.hpp"

namespace wex::chain {

/// Cohomology of A --f--> B --g--> C with f an inflation and g a deflation,
/// computed both ways:
///   (1) H = ker(u) for the factorization g = u g' through g' = coker(f);
///   (2) H' = coker(v) for the factorization f = f' v through f' = ker(g).
/// `iso` is the connecting morphism H -> H' of the snake on
///
///   A --f--> B --g'--> C'
///   |v       |id       |u
///   A' -f'-> B --g---> C
template <class M>
struct ChainCohomology {
  M f, g;
  M g_prime;  // B -> C'
  M u;        // C' -> C, deflation
  M h;        // H -> C', kernel of u
  M f_prime;  // A' -> B
  M v;        // A -> A', inflation
  M c;        // A' -> H', cokernel of v
  M iso;      // H -> H'
  bool iso_inflation = false;
  bool iso_deflation = false;
  engine::SnakeResult<M> snake;
};

/// True iff a is isomorphic to the zero object (its identity is zero).
template <WeaklyExactCategory C>
bool is_zero_like(const C& cat, const ObjectOf<C>& a) {
  return is_zero_morphism(cat, cat.identity(a));
}

/// Both constructions with the short exact sequences supplied by the caller:
/// g' a cokernel of f and f' a kernel of g.
template <WeaklyExactCategory C>
ChainCohomology<MorphismOf<C>> cohomology_two_ways(const C& cat, const MorphismOf<C>& f, const MorphismOf<C>& g,
                                                   const MorphismOf<C>& g_prime, const MorphismOf<C>& f_prime) {
  using M = MorphismOf<C>;
  if (!composable(cat, g, f)) throw HypothesisViolation("f, g not composable", cat.describe(f));
  if (!is_zero_morphism(cat, cat.compose(g, f))) throw HypothesisViolation("g f not zero", cat.describe(g));
  if (!cat.is_deflation(g)) throw HypothesisViolation("g not a deflation", cat.describe(g));
  engine::require_short_exact(cat, f, g_prime, "f not an inflation with cokernel g'");
  engine::require_short_exact(cat, f_prime, g, "g not a deflation with kernel f'");

  const M u = engine::step("C' -> C", [&] { return cat.cokernel_colift(f, g_prime, g); });
  engine::expect_deflation(cat, u, "C' -> C deflation");
  const M h = cat.kernel(u);
  const M v = engine::step("A -> A'", [&] { return cat.kernel_lift(g, f_prime, f); });
  const M c = cat.cokernel(v);
  engine::expect_short_exact(cat, v, c, "A -> A' inflation");

  const auto b = cat.target(f);
  const engine::SnakeDiagram<M> d{f,
                                  g_prime,
                                  f_prime,
                                  g,
                                  inflation_factorization(cat, v, c),
                                  identity_factorization(cat, b),
                                  deflation_factorization(cat, u, h)};
  engine::SnakeResult<M> s = engine::snake(cat, d);
  ChainCohomology<M> r{f, g, g_prime, u, h, f_prime, v, c, s.delta, false, false, s};
  r.iso_deflation = cat.is_deflation(s.delta);
  r.iso_inflation = is_inflation(cat, s.delta);
  if (!r.iso_deflation || !r.iso_inflation) {
    throw ConclusionFailure("H -> H' isomorphism", cat.describe(s.delta));
  }
  return r;
}

template <WeaklyExactCategory C>
ChainCohomology<MorphismOf<C>> cohomology_two_ways(const C& cat, const MorphismOf<C>& f, const MorphismOf<C>& g) {
  if (!composable(cat, g, f)) throw HypothesisViolation("f, g not composable", cat.describe(f));
  if (!cat.is_deflation(g)) throw HypothesisViolation("g not a deflation", cat.describe(g));
  if (!is_inflation(cat, f)) throw HypothesisViolation("f not an inflation", cat.describe(f));
  return cohomology_two_ways(cat, f, g, cat.cokernel(f), cat.kernel(g));
}

template <WeaklyExactCategory C>
ObjectOf<C> kernel_side(const C& cat, const ChainCohomology<MorphismOf<C>>& h) {
  return cat.source(h.h);
}

template <WeaklyExactCategory C>
ObjectOf<C> cokernel_side(const C& cat, const ChainCohomology<MorphismOf<C>>& h) {
  return cat.target(h.c);
}

/// Map on kernel-side cohomology induced by phi: B -> B2 between the middle
/// objects of two chains, assuming phi carries the first chain into the second.
template <WeaklyExactCategory C>
MorphismOf<C> induced_on_cohomology(const C& cat, const ChainCohomology<MorphismOf<C>>& x,
                                    const ChainCohomology<MorphismOf<C>>& y, const MorphismOf<C>& phi) {
  const auto on_c = engine::step("induced map on C'", [&] {
    return cat.cokernel_colift(x.f, x.g_prime, checked_compose(cat, y.g_prime, phi));
  });
  return engine::step("induced map on H", [&] {
    return cat.kernel_lift(y.u, y.h, cat.compose(on_c, x.h));
  });
}

// ---------------------------------------------------------------------------
// Snake on a grid of maps rho: C -> K whose rows are only right exact
// (C row) resp. left exact (K row).

/// `cs` supplies the row C1 -> C2 -> C3 (its psi1', psi2'), `ks` the row
/// K1 -> K2 -> K3 (its psi1, psi2). rho_k: C_k -> K_k carry factorizations;
/// their kernels and cokernels are the comparison targets.
///
/// The C row is cut down to J -> C2 -> C3 with C1 -> J a deflation, the K row
/// to K1 -> K2 -> L with L -> K3 an inflation, and the extended snake is run
/// on the resulting diagram. The six maps are returned between
/// ker(rho_1), ker(rho_2), ker(rho_3), coker(rho_1), coker(rho_2), coker(rho_3).
template <class M>
struct GridSnake {
  engine::SnakeDiagram<M> diagram;
  engine::ExtendedSnakeResult<M> extended;
  std::vector<M> maps;
};

template <HasAdmissibleFactorization C>
GridSnake<MorphismOf<C>> snake_on_grid(const C& cat, const engine::SnakeResult<MorphismOf<C>>& cs,
                                       const engine::SnakeResult<MorphismOf<C>>& ks,
                                       const AdmissibleFactorization<MorphismOf<C>>& rho1,
                                       const AdmissibleFactorization<MorphismOf<C>>& rho2,
                                       const AdmissibleFactorization<MorphismOf<C>>& rho3) {
  using M = MorphismOf<C>;
  engine::require_commutes(cat, rho2.morphism, cs.psi1p, ks.psi1, rho1.morphism, "left grid square does not commute");
  engine::require_commutes(cat, rho3.morphism, cs.psi2p, ks.psi2, rho2.morphism, "right grid square does not commute");

  const M& j = cs.i;
  const M& a = cs.alpha;
  const M& q = ks.q;
  const M& b = ks.l;
  const M f1 = engine::step("J -> K1", [&] { return cat.kernel_lift(q, ks.psi1, cat.compose(rho2.morphism, j)); });
  const M f3 = engine::step("C3 -> L", [&] { return cat.cokernel_colift(j, cs.psi2p, cat.compose(q, rho2.morphism)); });
  engine::expect_equal(cat, cat.compose(f1, a), rho1.morphism, "rho1 = (J -> K1)(C1 -> J)");
  engine::expect_equal(cat, cat.compose(b, f3), rho3.morphism, "rho3 = (L -> K3)(C3 -> L)");

  auto factor = [&](const M& f, const char* name) {
    auto fac = cat.admissible_factorization(f);
    if (!fac) throw ConclusionFailure(name, cat.describe(f) + " is not admissible");
    return *fac;
  };
  const engine::SnakeDiagram<M> d{j, cs.psi2p, ks.psi1, q, factor(f1, "J -> K1 admissible"), rho2,
                                  factor(f3, "C3 -> L admissible")};
  auto ext = engine::snake_extended(cat, d, a, b);

  // Comparisons with the kernels and cokernels of the rho's.
  const M f1a = cat.compose(d.f1.deflation_part, a);
  const M k1_to = engine::step("K1' -> ker rho1", [&] { return cat.kernel_lift(rho1.deflation_part, rho1.kernel, ext.k1_ext); });
  const M k1_from = engine::step("ker rho1 -> K1'", [&] { return cat.kernel_lift(f1a, ext.k1_ext, rho1.kernel); });
  const M k3_to = engine::step("K3 -> ker rho3", [&] { return cat.kernel_lift(rho3.deflation_part, rho3.kernel, d.f3.kernel); });
  const M k3_from = engine::step("ker rho3 -> K3", [&] { return cat.kernel_lift(d.f3.deflation_part, d.f3.kernel, rho3.kernel); });
  const M c1_to = engine::step("C1 -> coker rho1", [&] { return cat.cokernel_colift(d.f1.inflation_part, d.f1.cokernel, rho1.cokernel); });
  const M b_f3 = cat.compose(b, d.f3.inflation_part);
  const M c3_to = engine::step("C3' -> coker rho3", [&] { return cat.cokernel_colift(b_f3, ext.c3_ext, rho3.cokernel); });
  const M c1_from = engine::step("coker rho1 -> C1", [&] { return cat.cokernel_colift(rho1.inflation_part, rho1.cokernel, d.f1.cokernel); });
  if (!are_inverse(cat, k1_to, k1_from)) throw ConclusionFailure("ker rho1 comparison", "maps are not inverse");
  if (!are_inverse(cat, k3_to, k3_from)) throw ConclusionFailure("ker rho3 comparison", "maps are not inverse");
  if (!are_inverse(cat, c1_to, c1_from)) throw ConclusionFailure("coker rho1 comparison", "maps are not inverse");
  if (!is_isomorphism(cat, c3_to)) throw ConclusionFailure("coker rho3 comparison", "map is not an isomorphism");

  const auto& s = ext.sequence;
  std::vector<M> maps{
      cat.compose(s[0], k1_from),
      cat.compose(k3_to, s[1]),
      compose_all(cat, {c1_to, s[2], k3_from}),
      cat.compose(s[3], c1_from),
      cat.compose(c3_to, s[4]),
  };
  return {d, ext, maps};
}

// ---------------------------------------------------------------------------
// Differential objects.

/// An object with an admissible d: A -> A, d d = 0.
template <class M>
struct DifferentialObject {
  M d;
  AdmissibleFactorization<M> fac;  // A --> I --> A
};

template <HasAdmissibleFactorization C>
DifferentialObject<MorphismOf<C>> differential_object(const C& cat, const MorphismOf<C>& d) {
  if (!cat.same_object(cat.source(d), cat.target(d))) throw HypothesisViolation("d not an endomorphism", cat.describe(d));
  if (!is_zero_morphism(cat, cat.compose(d, d))) throw HypothesisViolation("d d not zero", cat.describe(d));
  auto fac = cat.admissible_factorization(d);
  if (!fac) throw HypothesisViolation("d not admissible", cat.describe(d));
  return {d, *fac};
}

/// H of a differential object: the cohomology of I --> A --> I, together with
/// the admissible map C --> I --> K whose kernel and cokernel are H.
template <class M>
struct DifferentialCohomology {
  ChainCohomology<M> chain;
  AdmissibleFactorization<M> rho;  // C -> K
};

template <WeaklyExactCategory C>
DifferentialCohomology<MorphismOf<C>> differential_cohomology(const C& cat, const DifferentialObject<MorphismOf<C>>& x) {
  using M = MorphismOf<C>;
  const auto& fac = x.fac;
  auto chain = engine::step("H(A)", [&] {
    return cohomology_two_ways(cat, fac.inflation_part, fac.deflation_part, fac.cokernel, fac.kernel);
  });
  const M rho = cat.compose(chain.v, chain.u);
  return {chain, {rho, chain.u, chain.v, chain.h, chain.c}};
}

template <WeaklyExactCategory C>
MorphismOf<C> induced_on_cohomology(const C& cat, const DifferentialCohomology<MorphismOf<C>>& x,
                                    const DifferentialCohomology<MorphismOf<C>>& y, const MorphismOf<C>& phi) {
  return induced_on_cohomology(cat, x.chain, y.chain, phi);
}

/// Outcome of the exact triangle H(A) -> H(A') -> H(A'') -> H(A).
template <class M>
struct ExactTriangle {
  DifferentialCohomology<M> a, a1, a2;
  engine::SnakeResult<M> first;  // on the rows A -> A' -> A'' with verticals d
  GridSnake<M> second;           // on C -> K
  M h_to_h1;                     // H(A) -> H(A')
  M h1_to_h2;                    // H(A') -> H(A'')
  M delta;                       // H(A'') -> H(A)
  LongExactReport exactness;     // over H(A) -> H(A') -> H(A'') -> H(A) -> H(A')
  bool exact_at_a = false;
  bool exact_at_a1 = false;
  bool exact_at_a2 = false;
};

template <HasAdmissibleFactorization C>
ExactTriangle<MorphismOf<C>> exact_triangle(const C& cat, const DifferentialObject<MorphismOf<C>>& x,
                                            const DifferentialObject<MorphismOf<C>>& x1,
                                            const DifferentialObject<MorphismOf<C>>& x2, const MorphismOf<C>& i,
                                            const MorphismOf<C>& p) {
  using M = MorphismOf<C>;
  engine::require_short_exact(cat, i, p, "A -> A' -> A'' not short exact");
  engine::require_commutes(cat, x1.d, i, i, x.d, "A -> A' does not commute with d");
  engine::require_commutes(cat, x2.d, p, p, x1.d, "A' -> A'' does not commute with d");

  const auto ha = differential_cohomology(cat, x);
  const auto ha1 = differential_cohomology(cat, x1);
  const auto ha2 = differential_cohomology(cat, x2);
  const engine::SnakeDiagram<M> rows{i, p, i, p, x.fac, x1.fac, x2.fac};
  const auto first = engine::snake(cat, rows);
  const auto second = snake_on_grid(cat, first, first, ha.rho, ha1.rho, ha2.rho);

  const M delta = cat.compose(inverse(cat, ha.chain.iso), second.maps[2]);
  ExactTriangle<M> r{ha, ha1, ha2, first, second, second.maps[0], second.maps[1], delta, {}};
  const M back = compose_all(cat, {inverse(cat, ha1.chain.iso), second.maps[3], ha.chain.iso});
  const std::vector<M> seq{r.h_to_h1, r.h1_to_h2, r.delta, back};
  std::vector<AdmissibleFactorization<M>> facs;
  for (const M& m : seq) {
    auto fac = cat.admissible_factorization(m);
    if (!fac) throw ConclusionFailure("triangle map admissible", cat.describe(m));
    facs.push_back(*fac);
  }
  r.exactness = check_long_exact(cat, seq, facs);
  r.exact_at_a1 = r.exactness.joint_holds[1];
  r.exact_at_a2 = r.exactness.joint_holds[2];
  r.exact_at_a = r.exactness.joint_holds[3];
  return r;
}

// ---------------------------------------------------------------------------
// Complexes.

/// A_lo --> ... --> A_hi with admissible differentials; zero outside the window.
template <WeaklyExactCategory C>
struct Complex {
  int lo = 0;
  std::vector<ObjectOf<C>> objects;
  std::vector<AdmissibleFactorization<MorphismOf<C>>> differentials;  // d_i: A_i -> A_{i+1}

  int hi() const { return lo + static_cast<int>(objects.size()) - 1; }
  bool in_window(int i) const { return i >= lo && i <= hi(); }
};

template <HasAdmissibleFactorization C>
Complex<C> make_complex(const C& cat, int lo, const std::vector<ObjectOf<C>>& objects,
                        const std::vector<MorphismOf<C>>& differentials) {
  if (objects.empty()) throw ContractViolation("make_complex: empty window");
  if (differentials.size() + 1 != objects.size()) {
    throw ContractViolation("make_complex: " + std::to_string(objects.size()) + " objects need " +
                            std::to_string(objects.size() - 1) + " differentials");
  }
  Complex<C> x{lo, objects, {}};
  for (std::size_t k = 0; k < differentials.size(); ++k) {
    const auto& d = differentials[k];
    if (!cat.same_object(cat.source(d), objects[k]) || !cat.same_object(cat.target(d), objects[k + 1])) {
      throw ContractViolation("make_complex: d" + std::to_string(lo + static_cast<int>(k)) + " has wrong endpoints");
    }
    if (k > 0 && !is_zero_morphism(cat, cat.compose(d, differentials[k - 1]))) {
      throw HypothesisViolation("d d not zero", "in degree " + std::to_string(lo + static_cast<int>(k) - 1));
    }
    auto fac = cat.admissible_factorization(d);
    if (!fac) throw HypothesisViolation("differential not admissible", cat.describe(d));
    x.differentials.push_back(*fac);
  }
  return x;
}

template <WeaklyExactCategory C>
ObjectOf<C> object_at(const C& cat, const Complex<C>& x, int i) {
  return x.in_window(i) ? x.objects[static_cast<std::size_t>(i - x.lo)] : cat.zero_object();
}

/// d_i: A_i -> A_{i+1}, with the zero maps at and beyond the ends.
template <HasAdmissibleFactorization C>
AdmissibleFactorization<MorphismOf<C>> differential_at(const C& cat, const Complex<C>& x, int i) {
  if (i >= x.lo && i < x.hi()) return x.differentials[static_cast<std::size_t>(i - x.lo)];
  return *cat.admissible_factorization(zero_morphism(cat, object_at(cat, x, i), object_at(cat, x, i + 1)));
}

/// H^i two ways: the chain Z_{i-1} --> A_i --> Z_i.
template <HasAdmissibleFactorization C>
ChainCohomology<MorphismOf<C>> cohomology_at(const C& cat, const Complex<C>& x, int i) {
  const auto in = differential_at(cat, x, i - 1);
  const auto out = differential_at(cat, x, i);
  return engine::step("H^" + std::to_string(i), [&] {
    return cohomology_two_ways(cat, in.inflation_part, out.deflation_part, in.cokernel, out.kernel);
  });
}

/// The kernel-side H^i; zero outside the window by the support convention.
template <HasAdmissibleFactorization C>
ObjectOf<C> cohomology(const C& cat, const Complex<C>& x, int i) {
  return kernel_side(cat, cohomology_at(cat, x, i));
}

/// rho_i: C_{i-1} --> Z_i --> K_{i+1}, kernel H^i and cokernel H^{i+1}.
template <HasAdmissibleFactorization C>
AdmissibleFactorization<MorphismOf<C>> rho_at(const C& cat, const ChainCohomology<MorphismOf<C>>& hi,
                                             const ChainCohomology<MorphismOf<C>>& hnext) {
  return {cat.compose(hnext.v, hi.u), hi.u, hnext.v, hi.h, hnext.c};
}

/// f_i: A_i -> B_i; components outside the stored range are zero.
template <WeaklyExactCategory C>
struct ChainMap {
  int lo = 0;
  std::vector<MorphismOf<C>> components;
};

template <WeaklyExactCategory C>
MorphismOf<C> component_at(const C& cat, const Complex<C>& a, const Complex<C>& b, const ChainMap<C>& f, int i) {
  const int k = i - f.lo;
  if (k >= 0 && k < static_cast<int>(f.components.size())) return f.components[static_cast<std::size_t>(k)];
  return zero_morphism(cat, object_at(cat, a, i), object_at(cat, b, i));
}

template <HasAdmissibleFactorization C>
void require_chain_map(const C& cat, const Complex<C>& a, const Complex<C>& b, const ChainMap<C>& f,
                       const std::string& name) {
  const int lo = std::min(a.lo, b.lo) - 1;
  const int hi = std::max(a.hi(), b.hi()) + 1;
  for (int i = lo; i <= hi; ++i) {
    const auto fi = component_at(cat, a, b, f, i);
    if (!cat.same_object(cat.source(fi), object_at(cat, a, i)) || !cat.same_object(cat.target(fi), object_at(cat, b, i))) {
      throw HypothesisViolation(name + " has wrong endpoints", "in degree " + std::to_string(i));
    }
  }
  for (int i = lo; i < hi; ++i) {
    engine::require_commutes(cat, differential_at(cat, b, i).morphism, component_at(cat, a, b, f, i),
                             component_at(cat, a, b, f, i + 1), differential_at(cat, a, i).morphism,
                             name + " does not commute with d in degree " + std::to_string(i));
  }
}

/// H^i(f): H^i(A) -> H^i(B) on kernel-side cohomology.
template <HasAdmissibleFactorization C>
MorphismOf<C> induced_map(const C& cat, const Complex<C>& a, const Complex<C>& b, const ChainMap<C>& f, int i) {
  return induced_on_cohomology(cat, cohomology_at(cat, a, i), cohomology_at(cat, b, i), component_at(cat, a, b, f, i));
}

/// Window covering both complexes.
template <WeaklyExactCategory C>
std::pair<int, int> joint_window(const Complex<C>& a, const Complex<C>& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi(), b.hi())};
}

/// The first degree where H^i(f) is not an isomorphism, if any.
template <HasAdmissibleFactorization C>
std::optional<int> quasi_isomorphism_failure(const C& cat, const Complex<C>& a, const Complex<C>& b,
                                             const ChainMap<C>& f) {
  require_chain_map(cat, a, b, f, "f");
  const auto [lo, hi] = joint_window(a, b);
  for (int i = lo; i <= hi; ++i) {
    if (!is_isomorphism(cat, induced_map(cat, a, b, f, i))) return i;
  }
  return std::nullopt;
}

template <HasAdmissibleFactorization C>
bool is_quasi_isomorphism(const C& cat, const Complex<C>& a, const Complex<C>& b, const ChainMap<C>& f) {
  return !quasi_isomorphism_failure(cat, a, b, f).has_value();
}

/// The long exact sequence of a pointwise short exact sequence of complexes,
/// with every object the kernel-side H^i. objects[3k + j] is H^{lo-1+k} of
/// the j-th complex; maps[n] goes from objects[n] to objects[n + 1].
template <class M, class O>
struct LongExactCohomology {
  int first_degree = 0;
  std::vector<O> objects;
  std::vector<M> maps;
  std::vector<GridSnake<M>> grids;
  LongExactReport exactness;
};

template <HasAdmissibleFactorization C>
LongExactCohomology<MorphismOf<C>, ObjectOf<C>> les_of_complexes(const C& cat, const Complex<C>& a,
                                                                  const Complex<C>& a1, const Complex<C>& a2,
                                                                  const ChainMap<C>& u, const ChainMap<C>& v) {
  using M = MorphismOf<C>;
  require_chain_map(cat, a, a1, u, "A -> A'");
  require_chain_map(cat, a1, a2, v, "A' -> A''");
  const int lo = std::min({a.lo, a1.lo, a2.lo});
  const int hi = std::max({a.hi(), a1.hi(), a2.hi()});
  for (int i = lo; i <= hi; ++i) {
    engine::require_short_exact(cat, component_at(cat, a, a1, u, i), component_at(cat, a1, a2, v, i),
                                "not pointwise short exact in degree " + std::to_string(i));
  }

  const Complex<C>* xs[] = {&a, &a1, &a2};
  // Snakes on degree j -> j+1 with verticals d_j, for j in [lo-2, hi+1].
  std::vector<engine::SnakeResult<M>> snakes;
  for (int j = lo - 2; j <= hi + 1; ++j) {
    const engine::SnakeDiagram<M> d{component_at(cat, a, a1, u, j),       component_at(cat, a1, a2, v, j),
                                    component_at(cat, a, a1, u, j + 1),   component_at(cat, a1, a2, v, j + 1),
                                    differential_at(cat, a, j),           differential_at(cat, a1, j),
                                    differential_at(cat, a2, j)};
    snakes.push_back(engine::snake(cat, d));
  }
  auto snake_at = [&](int j) -> const engine::SnakeResult<M>& { return snakes[static_cast<std::size_t>(j - (lo - 2))]; };
  // Cohomology pieces for degrees [lo-1, hi+1].
  std::vector<std::vector<ChainCohomology<M>>> pieces(3);
  for (int n = 0; n < 3; ++n)
    for (int i = lo - 1; i <= hi + 1; ++i) pieces[n].push_back(cohomology_at(cat, *xs[n], i));
  auto piece = [&](int n, int i) -> const ChainCohomology<M>& { return pieces[n][static_cast<std::size_t>(i - (lo - 1))]; };

  LongExactCohomology<M, ObjectOf<C>> r;
  r.first_degree = lo - 1;
  for (int i = lo - 1; i <= hi + 1; ++i)
    for (int n = 0; n < 3; ++n) r.objects.push_back(kernel_side(cat, piece(n, i)));

  for (int i = lo - 1; i <= hi; ++i) {
    const auto g = snake_on_grid(cat, snake_at(i - 1), snake_at(i + 1), rho_at(cat, piece(0, i), piece(0, i + 1)),
                                 rho_at(cat, piece(1, i), piece(1, i + 1)), rho_at(cat, piece(2, i), piece(2, i + 1)));
    r.maps.push_back(g.maps[0]);
    r.maps.push_back(g.maps[1]);
    r.maps.push_back(cat.compose(inverse(cat, piece(0, i + 1).iso), g.maps[2]));
    if (i == hi) {
      r.maps.push_back(compose_all(cat, {inverse(cat, piece(1, i + 1).iso), g.maps[3], piece(0, i + 1).iso}));
      r.maps.push_back(compose_all(cat, {inverse(cat, piece(2, i + 1).iso), g.maps[4], piece(1, i + 1).iso}));
    }
    r.grids.push_back(g);
  }
  std::vector<AdmissibleFactorization<M>> facs;
  for (const M& m : r.maps) {
    auto fac = cat.admissible_factorization(m);
    if (!fac) throw ConclusionFailure("cohomology map admissible", cat.describe(m));
    facs.push_back(*fac);
  }
  r.exactness = check_long_exact(cat, r.maps, facs);
  return r;
}

/// Kernel of a pointwise deflation f: A -> B, with the admissible
/// factorizations K_i --> I_i'' --> K_{i+1} where I_i'' = ker(I_i -> I_i').
template <WeaklyExactCategory C>
struct KernelComplex {
  Complex<C> complex;
  ChainMap<C> inclusion;  // K -> A
  /// Per differential: true when K_i -> I_i'' -> K_{i+1} is admissible,
  /// false when K_i -> I_i'' is not a deflation and the differential was
  /// factored directly instead.
  std::vector<bool> via_image_kernel;
};

template <HasAdmissibleFactorization C>
KernelComplex<C> kernel_complex(const C& cat, const Complex<C>& a, const Complex<C>& b, const ChainMap<C>& f) {
  using M = MorphismOf<C>;
  require_chain_map(cat, a, b, f, "f");
  const int lo = a.lo;
  const int hi = a.hi();
  std::vector<M> incl;
  std::vector<ObjectOf<C>> objs;
  for (int i = lo; i <= hi; ++i) {
    const M fi = component_at(cat, a, b, f, i);
    if (!cat.is_deflation(fi)) throw HypothesisViolation("f not a pointwise deflation", "in degree " + std::to_string(i));
    incl.push_back(cat.kernel(fi));
    objs.push_back(cat.source(incl.back()));
  }
  Complex<C> k{lo, objs, {}};
  std::vector<bool> via;
  for (int i = lo; i < hi; ++i) {
    const auto da = differential_at(cat, a, i);
    const auto db = differential_at(cat, b, i);
    const M& ki = incl[static_cast<std::size_t>(i - lo)];
    const M& ki1 = incl[static_cast<std::size_t>(i + 1 - lo)];
    const M fi = component_at(cat, a, b, f, i);
    const M fi1 = component_at(cat, a, b, f, i + 1);
    const M dk = engine::step("d on K", [&] { return cat.kernel_lift(fi1, ki1, cat.compose(da.morphism, ki)); });
    const M to_image = engine::step("I -> I'", [&] {
      return cat.cokernel_colift(da.kernel, da.deflation_part, cat.compose(db.deflation_part, fi));
    });
    engine::expect_deflation(cat, to_image, "I -> I' deflation");
    const M n = cat.kernel(to_image);
    const M down = engine::step("K_i -> I''", [&] { return cat.kernel_lift(to_image, n, cat.compose(da.deflation_part, ki)); });
    const M up = engine::step("I'' -> K_{i+1}", [&] { return cat.kernel_lift(fi1, ki1, cat.compose(da.inflation_part, n)); });
    engine::expect_equal(cat, cat.compose(up, down), dk, "d on K factors through I''");
    std::optional<AdmissibleFactorization<M>> fac;
    if (cat.is_deflation(down)) {
      fac = AdmissibleFactorization<M>{dk, down, up, cat.kernel(down), cat.cokernel(up)};
      via.push_back(true);
    } else {
      fac = cat.admissible_factorization(dk);
      if (!fac) throw ConclusionFailure("d on K admissible", "in degree " + std::to_string(i));
      via.push_back(false);
    }
    const CheckReport rep = engine::step("K_i -> K_{i+1} factorization", [&] { return check_factorization(cat, *fac); });
    if (!rep) throw ConclusionFailure("K_i -> K_{i+1} admissible", rep.clause);
    k.differentials.push_back(*fac);
  }
  return {k, {lo, incl}, via};
}

}  // namespace wex::chain
