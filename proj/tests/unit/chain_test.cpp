#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <numeric>

#include "support/chase_oracle.hpp"
#include "support/snf_oracle.hpp"
#include "wex/chain/hom_complex.hpp"
#include "wex/fgab/diagrams.hpp"

using namespace wex;
using namespace wex::chain;
using fgab::AbMorphism;
using fgab::FgabCategory;
using fgab::FpAbelianGroup;
using fgab::IntMatrix;
using fgab::Invariants;

namespace {

const FgabCategory cat;

FpAbelianGroup Z(std::size_t n = 1) { return FpAbelianGroup::free(n); }
FpAbelianGroup Zmod(long n) { return FpAbelianGroup::cyclic(n); }
AbMorphism hom(const FpAbelianGroup& a, const FpAbelianGroup& b, std::initializer_list<std::initializer_list<long>> m) {
  return AbMorphism(a, b, IntMatrix::of(m));
}
Invariants inv(std::vector<long> torsion, std::size_t rank) {
  Invariants i;
  for (long t : torsion) i.torsion.emplace_back(t);
  i.free_rank = rank;
  return i;
}

/// Total object of a complex with the block subdiagonal differential.
struct Total {
  fgab::DirectSum sum;
  DifferentialObject<AbMorphism> object;
};

Total totalize(const FgabComplex& x) {
  const auto sum = cat.direct_sum(x.objects);
  const std::size_t n = x.objects.size();
  std::vector<std::vector<AbMorphism>> blocks(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      blocks[r].push_back(r == c + 1 ? x.differentials[c].morphism : cat.zero(x.objects[c], x.objects[r]));
  return {sum, differential_object(cat, cat.block(sum, sum, blocks))};
}

AbMorphism totalize(const Total& a, const Total& b, const FgabComplex& ca, const FgabComplex& cb, const FgabChainMap& f) {
  const std::size_t n = a.sum.inclusions.size();
  std::vector<std::vector<AbMorphism>> blocks(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      blocks[r].push_back(r == c ? component_at(cat, ca, cb, f, ca.lo + static_cast<int>(c))
                                 : cat.zero(ca.objects[c], cb.objects[r]));
  return cat.block(a.sum, b.sum, blocks);
}

oracle::Mat to_mat(const IntMatrix& m) {
  oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).get_si();
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

TEST(CohomologyTwoWays, ExactChainHasZeroCohomology) {
  const auto f = hom(Z(), Z(), {{2}});
  const auto g = cat.cokernel(f);
  const auto h = cohomology_two_ways(cat, f, g);
  EXPECT_TRUE(h.iso_inflation);
  EXPECT_TRUE(h.iso_deflation);
  EXPECT_TRUE(is_zero_like(cat, kernel_side(cat, h)));
  EXPECT_TRUE(is_zero_like(cat, cokernel_side(cat, h)));
}

TEST(CohomologyTwoWays, FourThenReductionModTwo) {
  const auto f = hom(Z(), Z(), {{4}});
  const auto g = hom(Z(), Zmod(2), {{1}});
  const auto h = cohomology_two_ways(cat, f, g);
  EXPECT_EQ(kernel_side(cat, h).invariants(), inv({2}, 0));
  EXPECT_EQ(cokernel_side(cat, h).invariants(), inv({2}, 0));
  EXPECT_TRUE(is_isomorphism(cat, h.iso));
}

TEST(CohomologyTwoWays, ZeroChainGivesWholeObject) {
  const FpAbelianGroup b(2, IntMatrix::of({{3}, {0}}));
  const auto h = cohomology_two_ways(cat, cat.from_zero(b), cat.to_zero(b));
  EXPECT_EQ(kernel_side(cat, h).invariants(), b.invariants());
  EXPECT_EQ(cokernel_side(cat, h).invariants(), b.invariants());
}

TEST(CohomologyTwoWays, RejectsNonzeroComposite) {
  const auto f = hom(Z(), Z(), {{2}});
  const auto g = hom(Z(), Zmod(3), {{1}});
  try {
    cohomology_two_ways(cat, f, g);
    FAIL();
  } catch (const HypothesisViolation& e) {
    EXPECT_EQ(e.clause(), "g f not zero");
  }
}

TEST(CohomologyTwoWays, RandomChainsBothWaysAgree) {
  fgab::FgabDiagramSampler s(17);
  int exact = 0, inexact = 0;
  for (int n = 0; n < 60; ++n) {
    const auto b = s.object();
    const auto f = cat.admissible_factorization(s.morphism(s.object(), b))->inflation_part;
    const bool make_exact = n % 3 == 0;
    const auto g = make_exact ? cat.cokernel(f) : cat.cokernel(s.subgroup_containing(f));
    const auto h = cohomology_two_ways(cat, f, g);
    ASSERT_TRUE(h.iso_inflation && h.iso_deflation);
    EXPECT_EQ(kernel_side(cat, h).invariants(), cokernel_side(cat, h).invariants());
    const bool is_exact = static_cast<bool>(check_short_exact(cat, f, g));
    EXPECT_EQ(is_exact, is_zero_like(cat, kernel_side(cat, h)));
    if (make_exact) {
      EXPECT_TRUE(is_exact);
    }
    (is_exact ? exact : inexact)++;
  }
  EXPECT_GT(exact, 0);
  EXPECT_GT(inexact, 0);
}

// ---------------------------------------------------------------------------

TEST(DifferentialObject, ZeroDifferential) {
  const FpAbelianGroup a(2, IntMatrix::of({{4}, {0}}));
  const auto h = differential_cohomology(cat, differential_object(cat, cat.zero(a, a)));
  EXPECT_EQ(kernel_side(cat, h.chain).invariants(), a.invariants());
}

TEST(DifferentialObject, ShiftIsExact) {
  const auto h = differential_cohomology(cat, differential_object(cat, hom(Z(2), Z(2), {{0, 1}, {0, 0}})));
  EXPECT_TRUE(is_zero_like(cat, kernel_side(cat, h.chain)));
}

TEST(DifferentialObject, ShiftByTwo) {
  const auto h = differential_cohomology(cat, differential_object(cat, hom(Z(2), Z(2), {{0, 2}, {0, 0}})));
  EXPECT_EQ(kernel_side(cat, h.chain).invariants(), inv({2}, 0));
  // kernel and cokernel of C -> K both give H
  EXPECT_EQ(cat.source(h.rho.kernel).invariants(), inv({2}, 0));
  EXPECT_EQ(cat.target(h.rho.cokernel).invariants(), inv({2}, 0));
}

TEST(DifferentialObject, RejectsNonzeroSquare) {
  EXPECT_THROW(differential_object(cat, hom(Z(), Z(), {{1}})), HypothesisViolation);
}

TEST(DifferentialObject, Functoriality) {
  ComplexSampler s(23);
  for (int n = 0; n < 15; ++n) {
    const auto x = s.free_complex(0, 3);
    const auto y = s.free_complex(0, 3);
    const auto z = s.free_complex(0, 3);
    const HomComplex xy(x, y), yz(y, z);
    const auto f = s.cycle(xy, 0);
    const auto g = s.cycle(yz, 0);
    const auto gf = graded_compose(x, y, z, g, f);
    const auto tx = totalize(x), ty = totalize(y), tz = totalize(z);
    const auto hx = differential_cohomology(cat, tx.object);
    const auto hy = differential_cohomology(cat, ty.object);
    const auto hz = differential_cohomology(cat, tz.object);
    const auto ff = totalize(tx, ty, x, y, to_chain_map(x, y, f));
    const auto gg = totalize(ty, tz, y, z, to_chain_map(y, z, g));
    const auto hf = induced_on_cohomology(cat, hx, hy, ff);
    const auto hg = induced_on_cohomology(cat, hy, hz, gg);
    EXPECT_EQ(induced_on_cohomology(cat, hx, hz, cat.compose(gg, ff)), cat.compose(hg, hf));
    EXPECT_TRUE(is_identity(cat, induced_on_cohomology(cat, hx, hx, cat.identity(tx.sum.object))));
    // the same on complexes, degree by degree
    for (int i = 0; i <= 2; ++i) {
      const auto fi = induced_map(cat, x, y, to_chain_map(x, y, f), i);
      const auto gi = induced_map(cat, y, z, to_chain_map(y, z, g), i);
      EXPECT_EQ(induced_map(cat, x, z, to_chain_map(x, z, gf), i), cat.compose(gi, fi));
    }
  }
}

// ---------------------------------------------------------------------------

TEST(ExactTriangle, SplitSequenceHasZeroDelta) {
  const auto da = hom(Z(2), Z(2), {{0, 2}, {0, 0}});
  const auto dc = hom(Z(2), Z(2), {{0, 3}, {0, 0}});
  const auto sum = cat.direct_sum({Z(2), Z(2)});
  const auto db = cat.block(sum, sum, {{da, cat.zero(Z(2), Z(2))}, {cat.zero(Z(2), Z(2)), dc}});
  const auto t = exact_triangle(cat, differential_object(cat, da), differential_object(cat, db),
                                differential_object(cat, dc), sum.inclusions[0], sum.projections[1]);
  EXPECT_TRUE(t.exactness.exact) << t.exactness.clause;
  EXPECT_TRUE(is_zero_morphism(cat, t.delta));
  EXPECT_TRUE(is_inflation(cat, t.h_to_h1));
  EXPECT_TRUE(cat.is_deflation(t.h1_to_h2));
}

TEST(ExactTriangle, NonzeroDeltaMatchesChase) {
  // A = (Z, 0) --e1--> A' = (Z^2, [[0,2],[0,0]]) --pr2--> A'' = (Z, 0)
  const auto a = differential_object(cat, cat.zero(Z(), Z()));
  const auto d1 = hom(Z(2), Z(2), {{0, 2}, {0, 0}});
  const auto a1 = differential_object(cat, d1);
  const auto a2 = differential_object(cat, cat.zero(Z(), Z()));
  const auto i = hom(Z(), Z(2), {{1}, {0}});
  const auto p = hom(Z(2), Z(), {{0, 1}});
  const auto t = exact_triangle(cat, a, a1, a2, i, p);
  EXPECT_TRUE(t.exact_at_a && t.exact_at_a1 && t.exact_at_a2) << t.exactness.clause;
  EXPECT_EQ(cat.target(t.h_to_h1).invariants(), inv({2}, 0));

  // Chase each generator of H(A'') through A'' <- A' -> A' <- A.
  const auto& h2 = t.a2.chain.h;
  const auto& h0 = t.a.chain.h;
  for (std::size_t g = 0; g < h2.source().generators(); ++g) {
    oracle::Vec x;
    for (std::size_t r = 0; r < h2.matrix().rows(); ++r) x.push_back(h2.matrix()(r, g).get_si());
    const auto y = oracle::connecting_map(to_mat(p.matrix()), 2, to_mat(d1.matrix()), to_mat(i.matrix()), 1, x);
    ASSERT_TRUE(y.has_value());
    // the image of delta(generator) in C_A = A must be the chased element
    const IntMatrix lhs = (h0.matrix() * t.delta.matrix()).column(g);
    ASSERT_EQ(lhs.rows(), y->size());
    for (std::size_t r = 0; r < y->size(); ++r) EXPECT_EQ(lhs(r, 0).get_si(), (*y)[r]);
  }
  EXPECT_FALSE(is_zero_morphism(cat, t.delta));
}

TEST(ExactTriangle, TwoOfThreeExact) {
  ComplexSampler s(31);
  int checked = 0;
  for (int n = 0; n < 40; ++n) {
    const auto ses = s.pointwise_ses();
    const auto ta = totalize(ses.a), tb = totalize(ses.a1), tc = totalize(ses.a2);
    const auto u = totalize(ta, tb, ses.a, ses.a1, ses.u);
    const auto v = totalize(tb, tc, ses.a1, ses.a2, ses.v);
    const auto t = exact_triangle(cat, ta.object, tb.object, tc.object, u, v);
    ASSERT_TRUE(t.exactness.exact) << t.exactness.clause;
    const bool z0 = is_zero_like(cat, cat.source(t.h_to_h1));
    const bool z1 = is_zero_like(cat, cat.source(t.h1_to_h2));
    const bool z2 = is_zero_like(cat, cat.source(t.delta));
    if (z0 + z1 + z2 >= 2) {
      EXPECT_TRUE(z0 && z1 && z2);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(ExactTriangle, AcyclicEndsForceAcyclicMiddle) {
  // A = A'' = (Z^2, [[0,1],[0,0]]); A' an extension with a twisted corner.
  const auto d = hom(Z(2), Z(2), {{0, 1}, {0, 0}});
  const auto sum = cat.direct_sum({Z(2), Z(2)});
  const auto corner = hom(Z(2), Z(2), {{3, 0}, {0, -3}});  // d s - s d for s = diag(0, 3)... checked below
  const auto db = cat.block(sum, sum, {{d, corner}, {cat.zero(Z(2), Z(2)), d}});
  ASSERT_TRUE(is_zero_morphism(cat, cat.compose(db, db)));
  const auto t = exact_triangle(cat, differential_object(cat, d), differential_object(cat, db),
                                differential_object(cat, d), sum.inclusions[0], sum.projections[1]);
  EXPECT_TRUE(t.exactness.exact);
  EXPECT_TRUE(is_zero_like(cat, cat.source(t.h1_to_h2)));
}

// ---------------------------------------------------------------------------

namespace {

/// Homological complexes C_top -> ... -> C_0 placed in degrees -top..0.
FgabComplex homological(const std::vector<std::size_t>& ranks_from_top, const std::vector<IntMatrix>& boundaries) {
  return free_complex(-static_cast<int>(ranks_from_top.size()) + 1, ranks_from_top, boundaries);
}

std::vector<oracle::Homology> snf_homology(const std::vector<int>& dims, const std::vector<oracle::Mat>& bd) {
  return oracle::homology(dims, bd);
}

void expect_matches_oracle(const FgabComplex& x, const std::vector<int>& dims, const std::vector<oracle::Mat>& bd) {
  const auto expected = snf_homology(dims, bd);
  const auto got = cohomology_invariants(x);
  ASSERT_EQ(got.size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    // got is ordered by degree -top..0, expected by homological degree 0..top
    const auto& g = got[got.size() - 1 - k];
    EXPECT_EQ(g.free_rank, static_cast<std::size_t>(expected[k].free_rank)) << "H" << k;
    std::vector<long long> t;
    for (const auto& d : g.torsion) t.push_back(d.get_si());
    EXPECT_EQ(t, expected[k].torsion) << "H" << k;
  }
}

}  // namespace

TEST(Cohomology, Circle) {
  // two vertices, two edges a: v0 -> v1, b: v1 -> v0
  const auto x = homological({2, 2}, {IntMatrix::of({{-1, 1}, {1, -1}})});
  const auto h = cohomology_invariants(x);
  EXPECT_EQ(h[1], inv({}, 1));  // H0
  EXPECT_EQ(h[0], inv({}, 1));  // H1
  expect_matches_oracle(x, {2, 2}, {{{-1, 1}, {1, -1}}});
}

TEST(Cohomology, Torus) {
  const auto d2 = IntMatrix::of({{1, 1}, {1, 1}, {-1, -1}});
  const auto x = homological({2, 3, 1}, {d2, IntMatrix(1, 3)});
  const auto h = cohomology_invariants(x);
  EXPECT_EQ(h[2], inv({}, 1));
  EXPECT_EQ(h[1], inv({}, 2));
  EXPECT_EQ(h[0], inv({}, 1));
  expect_matches_oracle(x, {1, 3, 2}, {{{0, 0, 0}}, {{1, 1}, {1, 1}, {-1, -1}}});
}

TEST(Cohomology, ProjectivePlane) {
  const auto x = homological({1, 1, 1}, {IntMatrix::of({{2}}), IntMatrix::of({{0}})});
  const auto h = cohomology_invariants(x);
  EXPECT_EQ(h[2], inv({}, 1));
  EXPECT_EQ(h[1], inv({2}, 0));
  EXPECT_TRUE(h[0].is_zero());
  expect_matches_oracle(x, {1, 1, 1}, {{{0}}, {{2}}});
}

TEST(Cohomology, OutsideWindowIsZero) {
  const auto x = free_complex(0, {1}, {});
  EXPECT_TRUE(is_zero_like(cat, cohomology(cat, x, 5)));
  EXPECT_TRUE(is_zero_like(cat, cohomology(cat, x, -1)));
}

TEST(Cohomology, BothRoutesAgreeOnRandomComplexes) {
  ComplexSampler s(41);
  for (int n = 0; n < 30; ++n) {
    const auto x = s.free_complex();
    for (int i = x.lo; i <= x.hi(); ++i) {
      const auto h = cohomology_at(cat, x, i);
      EXPECT_TRUE(h.iso_inflation && h.iso_deflation);
      EXPECT_EQ(kernel_side(cat, h).invariants(), cokernel_side(cat, h).invariants());
    }
  }
}

TEST(Cohomology, EulerCharacteristic) {
  ComplexSampler s(43, {5, 3, 3});
  for (int n = 0; n < 40; ++n) {
    const auto x = s.free_complex();
    EXPECT_EQ(euler_characteristic(x), cohomology_euler_characteristic(x));
  }
}

TEST(Cohomology, RejectsNonComplex) {
  EXPECT_THROW(free_complex(0, {1, 1, 1}, {IntMatrix::of({{1}}), IntMatrix::of({{1}})}), HypothesisViolation);
}

// ---------------------------------------------------------------------------

TEST(LongExact, IdentityInclusion) {
  ComplexSampler s(47);
  const auto x = s.free_complex(0, 3);
  const auto zero = free_complex(0, {0, 0, 0}, {IntMatrix(0, 0), IntMatrix(0, 0)});
  FgabChainMap id{0, {}}, to0{0, {}};
  for (const auto& a : x.objects) {
    id.components.push_back(cat.identity(a));
    to0.components.push_back(cat.to_zero(a));
  }
  const auto les = les_of_complexes(cat, x, x, zero, id, to0);
  EXPECT_TRUE(les.exactness.exact) << les.exactness.clause;
  for (std::size_t n = 0; n < les.maps.size(); n += 3) EXPECT_TRUE(is_isomorphism(cat, les.maps[n]));
}

TEST(LongExact, BocksteinOnCircle) {
  const auto x = homological({2, 2}, {IntMatrix::of({{-1, 1}, {1, -1}})});
  std::vector<FpAbelianGroup> q;
  for (const auto& a : x.objects) q.emplace_back(a.generators(), 2 * IntMatrix::identity(a.generators()));
  const auto xq = fgab_complex(x.lo, q, {IntMatrix::of({{-1, 1}, {1, -1}})});
  FgabChainMap two{x.lo, {}}, red{x.lo, {}};
  for (std::size_t k = 0; k < q.size(); ++k) {
    two.components.push_back(cat.scale(2, cat.identity(x.objects[k])));
    red.components.emplace_back(x.objects[k], q[k], IntMatrix::identity(q[k].generators()));
  }
  const auto les = les_of_complexes(cat, x, x, xq, two, red);
  EXPECT_TRUE(les.exactness.exact) << les.exactness.clause;
  // H^{-1}(X/2) = Z/2 and the connecting map into H^0(X) = Z vanishes, as Z has no torsion
  const auto& objs = les.objects;
  const int first = les.first_degree;
  auto at = [&](int degree, int which) { return objs[static_cast<std::size_t>(3 * (degree - first) + which)]; };
  EXPECT_EQ(at(-1, 2).invariants(), inv({2}, 0));
  EXPECT_EQ(at(0, 2).invariants(), inv({2}, 0));
}

TEST(LongExact, RandomPointwiseSequences) {
  ComplexSampler s(53);
  for (int n = 0; n < 30; ++n) {
    const auto ses = s.pointwise_ses();
    const auto les = les_of_complexes(cat, ses.a, ses.a1, ses.a2, ses.u, ses.v);
    ASSERT_TRUE(les.exactness.exact) << "sample " << n << ": " << les.exactness.clause;
    EXPECT_EQ(euler_characteristic(ses.a1), cohomology_euler_characteristic(ses.a1));
  }
}

TEST(LongExact, RejectsNonChainMap) {
  const auto x = free_complex(0, {1, 1}, {IntMatrix::of({{2}})});
  FgabChainMap bad{0, {cat.identity(Z()), cat.scale(3, cat.identity(Z()))}};
  FgabChainMap id{0, {cat.identity(Z()), cat.identity(Z())}};
  EXPECT_THROW(les_of_complexes(cat, x, x, x, bad, id), HypothesisViolation);
}

// ---------------------------------------------------------------------------

TEST(KernelComplex, IdentityHasZeroKernel) {
  ComplexSampler s(59);
  const auto x = s.free_complex(0, 3);
  FgabChainMap id{0, {}};
  for (const auto& a : x.objects) id.components.push_back(cat.identity(a));
  const auto k = kernel_complex(cat, x, x, id);
  for (const auto& o : k.complex.objects) EXPECT_TRUE(is_zero_like(cat, o));
}

TEST(KernelComplex, ReductionModTwo) {
  ComplexSampler s(61);
  for (int n = 0; n < 10; ++n) {
    const auto x = s.free_complex(0, 3);
    std::vector<FpAbelianGroup> q;
    std::vector<IntMatrix> d;
    for (int i = 0; i <= x.hi(); ++i) {
      const std::size_t g = x.objects[static_cast<std::size_t>(i)].generators();
      q.emplace_back(g, 2 * IntMatrix::identity(g));
      if (i < x.hi()) d.push_back(x.differentials[static_cast<std::size_t>(i)].morphism.matrix());
    }
    const auto xq = fgab_complex(0, q, d);
    FgabChainMap red{0, {}};
    for (std::size_t k = 0; k < q.size(); ++k) red.components.emplace_back(x.objects[k], q[k], IntMatrix::identity(q[k].generators()));
    const auto k = kernel_complex(cat, x, xq, red);
    for (std::size_t i = 0; i < q.size(); ++i) {
      // K_i = 2 X_i, included by 2 times a unimodular change of basis
      EXPECT_EQ(k.complex.objects[i].invariants(), x.objects[i].invariants());
      const auto& incl = k.inclusion.components[i];
      EXPECT_TRUE(fgab::Lattice(incl.matrix()) == fgab::Lattice(2 * IntMatrix::identity(q[i].generators())));
    }
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      const auto& di = k.complex.differentials[i].morphism;
      EXPECT_EQ(cat.compose(k.inclusion.components[i + 1], di), cat.compose(x.differentials[i].morphism, k.inclusion.components[i]));
    }
  }
}

TEST(KernelComplex, ImageKernelRouteCanFail) {
  // Z --2--> Z reduced mod 2: K = 2Z --2--> 2Z has image 4Z, while
  // I'' = ker(2Z -> 0) = 2Z, so K_0 -> I'' is not onto.
  const auto x = free_complex(0, {1, 1}, {IntMatrix::of({{2}})});
  const auto xq = fgab_complex(0, {Zmod(2), Zmod(2)}, {IntMatrix::of({{2}})});
  FgabChainMap red{0, {hom(Z(), Zmod(2), {{1}}), hom(Z(), Zmod(2), {{1}})}};
  const auto k = kernel_complex(cat, x, xq, red);
  ASSERT_EQ(k.via_image_kernel.size(), 1u);
  EXPECT_FALSE(k.via_image_kernel[0]);
  EXPECT_EQ(cat.source(k.complex.differentials[0].kernel).invariants(), inv({}, 0));
  EXPECT_EQ(cat.target(k.complex.differentials[0].cokernel).invariants(), inv({2}, 0));
  // with d = 1 the route works
  const auto y = free_complex(0, {1, 1}, {IntMatrix::of({{1}})});
  const auto yq = fgab_complex(0, {Zmod(2), Zmod(2)}, {IntMatrix::of({{1}})});
  EXPECT_TRUE(kernel_complex(cat, y, yq, red).via_image_kernel[0]);
}

TEST(KernelComplex, OntoZeroKeepsSource) {
  const auto x = free_complex(0, {1, 2}, {IntMatrix::of({{1}, {2}})});
  const auto zero = free_complex(0, {0, 0}, {IntMatrix(0, 0)});
  FgabChainMap f{0, {cat.to_zero(Z()), cat.to_zero(Z(2))}};
  const auto k = kernel_complex(cat, x, zero, f);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE(is_isomorphism(cat, k.inclusion.components[i]));
}

// ---------------------------------------------------------------------------

namespace {

FgabComplex two_on_z() { return free_complex(0, {1, 1}, {IntMatrix::of({{2}})}); }

/// H^0(Hom(A, A)) for A = (Z --2--> Z) by brute force: chain maps (f0, f1)
/// with entries in a box, classes under f ~ f + (2g, 2g).
std::size_t brute_force_classes(long box) {
  std::vector<std::pair<long, long>> maps;
  for (long f0 = -box; f0 <= box; ++f0)
    for (long f1 = -box; f1 <= box; ++f1)
      if (f1 * 2 == 2 * f0) maps.emplace_back(f0, f1);
  std::vector<std::size_t> parent(maps.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t a = 0; a < maps.size(); ++a)
    for (std::size_t b = 0; b < maps.size(); ++b)
      for (long g = -2 * box; g <= 2 * box; ++g)
        if (maps[a].first - maps[b].first == g * 2 && maps[a].second - maps[b].second == 2 * g) parent[find(a)] = find(b);
  std::size_t classes = 0;
  for (std::size_t a = 0; a < maps.size(); ++a) classes += find(a) == a;
  return classes;
}

}  // namespace

TEST(HomComplex, SquareIsZero) {
  ComplexSampler s(67);
  for (int n = 0; n < 20; ++n) {
    const HomComplex h(s.free_complex(), s.free_complex());
    for (int k = h.lo(); k < h.hi(); ++k) EXPECT_TRUE((h.d_matrix(k + 1) * h.d_matrix(k)).is_zero());
    // and on a random element, componentwise
    const int k = h.lo() + static_cast<int>(s.base().index(static_cast<std::size_t>(h.hi() - h.lo())));
    const auto f = h.decode(k, s.base().matrix(h.rank(k), 1));
    for (const auto& c : h.d(h.d(f)).components) EXPECT_TRUE(cat.is_zero(c));
  }
}

TEST(HomComplex, EndomorphismsOfTwoOnZ) {
  const auto a = two_on_z();
  const HomComplex h(a, a);
  EXPECT_EQ(h.lo(), -1);
  EXPECT_EQ(h.hi(), 1);
  const auto h0 = cohomology(cat, h.complex(), 0).invariants();
  EXPECT_EQ(h0, inv({2}, 0));
  EXPECT_EQ(brute_force_classes(3), 2u);
  EXPECT_EQ(h0.torsion.size() == 1 ? h0.torsion[0].get_ui() : 0u, brute_force_classes(3));
}

TEST(HomComplex, SingleZ) {
  const auto a = free_complex(0, {1}, {});
  const HomComplex h(a, a);
  EXPECT_EQ(h.lo(), 0);
  EXPECT_EQ(h.hi(), 0);
  EXPECT_EQ(h.rank(0), 1u);
  EXPECT_EQ(cohomology(cat, h.complex(), 0).invariants(), inv({}, 1));
}

TEST(HomComplex, ZeroTarget) {
  const auto a = two_on_z();
  const auto zero = free_complex(0, {0}, {});
  const HomComplex h(a, zero);
  for (int k = h.lo(); k <= h.hi(); ++k) EXPECT_EQ(h.rank(k), 0u);
}

TEST(HomComplex, TorsionRejected) {
  const auto q = fgab_complex(0, {Zmod(2)}, {});
  EXPECT_THROW(HomComplex(q, q), Unsupported);
}

TEST(HomComplex, GradedAdditionNeedsEqualDegrees) {
  const auto a = two_on_z();
  EXPECT_THROW(graded_add(graded_identity(a), differential_of(a)), ContractViolation);
  EXPECT_EQ(epsilon(differential_of(a)).components[0].matrix(), IntMatrix::of({{-2}}));
}

TEST(Homotopy, IdentityInducesIdentity) {
  const auto a = two_on_z();
  const HomComplex h(a, a);
  const auto maps = homotopy_class_map(h, graded_identity(a));
  ASSERT_EQ(maps.size(), 2u);
  EXPECT_TRUE(is_identity(cat, maps[1]));
  EXPECT_EQ(cat.source(maps[1]).invariants(), inv({2}, 0));
}

TEST(Homotopy, TwiceIdentityIsNullHomotopic) {
  const auto a = two_on_z();
  const HomComplex h(a, a);
  const auto id = graded_identity(a);
  const auto twice = graded_add(id, id);
  for (const auto& m : homotopy_class_map(h, twice)) EXPECT_TRUE(is_zero_morphism(cat, m));
  EXPECT_TRUE(homotopy_equal(h, twice, graded_zero(a, a, 0)));
  EXPECT_FALSE(homotopy_equal(h, id, graded_zero(a, a, 0)));
  const auto s = h.primitive(twice);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(graded_equal(h.d(*s), twice));
}

TEST(Homotopy, ZeroMapInducesZero) {
  const auto a = two_on_z();
  const HomComplex h(a, a);
  for (const auto& m : homotopy_class_map(h, graded_zero(a, a, 0))) EXPECT_TRUE(is_zero_morphism(cat, m));
}

TEST(Homotopy, NonCycleRejected) {
  const auto a = two_on_z();
  const HomComplex h(a, a);
  GradedMorphism f = graded_zero(a, a, 0);
  f.components[0] = cat.identity(Z());
  EXPECT_THROW(homotopy_class_map(h, f), ContractViolation);
}

TEST(Homotopy, HomotopicCyclesInduceEqualMaps) {
  ComplexSampler s(71);
  for (int n = 0; n < 15; ++n) {
    const auto a = s.free_complex(), b = s.free_complex();
    const HomComplex h(a, b);
    const auto f = s.cycle(h, 0);
    const auto g = graded_add(f, h.d(h.decode(-1, s.base().matrix(h.rank(-1), 1))));
    EXPECT_TRUE(homotopy_equal(h, f, g));
    const auto mf = homotopy_class_map(h, f);
    const auto mg = homotopy_class_map(h, g);
    EXPECT_EQ(mf, mg);
  }
}

TEST(QuasiIsomorphism, Identity) {
  const auto a = two_on_z();
  EXPECT_TRUE(is_quasi_isomorphism(a, a, graded_identity(a)));
}

TEST(QuasiIsomorphism, AcyclicToZero) {
  const auto a = free_complex(0, {1, 1}, {IntMatrix::of({{1}})});
  const auto zero = free_complex(0, {0, 0}, {IntMatrix(0, 0)});
  EXPECT_TRUE(is_quasi_isomorphism(a, zero, graded_zero(a, zero, 0)));
  const auto b = two_on_z();
  EXPECT_FALSE(is_quasi_isomorphism(b, zero, graded_zero(b, zero, 0)));
}

TEST(QuasiIsomorphism, SampledWeakVariant) {
  ComplexSampler s(73, {3, 2, 2});
  std::vector<FgabComplex> tests;
  for (int n = 0; n < 10; ++n) tests.push_back(s.free_complex());
  int qis = 0;
  for (int n = 0; n < 6; ++n) {
    const auto q = s.quasi_isomorphism();
    ASSERT_TRUE(is_quasi_isomorphism(q.a, q.b, q.f));
    const auto r = is_weakly_quasi_isomorphism(q.a, q.b, q.f, tests);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.samples, tests.size());
    ++qis;
  }
  EXPECT_EQ(qis, 6);
  const auto a = two_on_z();
  EXPECT_THROW(is_weakly_quasi_isomorphism(a, a, graded_identity(a), {}), ContractViolation);
  // multiplication by 3 on Z --2--> Z is a quasi-isomorphism, by 2 is not
  const auto id = graded_identity(a);
  const auto three = graded_add(graded_add(id, id), id);
  EXPECT_TRUE(is_quasi_isomorphism(a, a, three));
  EXPECT_FALSE(is_quasi_isomorphism(a, a, graded_add(id, id)));
  EXPECT_FALSE(is_weakly_quasi_isomorphism(a, a, graded_add(id, id), {free_complex(1, {1}, {})}).holds);
}
