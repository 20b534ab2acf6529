#include <gtest/gtest.h>

#include "support/chase_oracle.hpp"
#include "wex/engine/axioms.hpp"
#include "wex/engine/snake.hpp"
#include "wex/engine/three_by_three.hpp"
#include "wex/fgab/diagrams.hpp"
#include "wex/pointed/pointed_sets.hpp"

using namespace wex;
using namespace wex::engine;
using namespace wex::fgab;

namespace {

const FgabCategory cat;

FpAbelianGroup Z(std::size_t n = 1) { return FpAbelianGroup::free(n); }
FpAbelianGroup Zmod(long n) { return FpAbelianGroup::cyclic(n); }

AbMorphism hom(const FpAbelianGroup& a, const FpAbelianGroup& b, std::initializer_list<std::initializer_list<long>> m) {
  return AbMorphism(a, b, IntMatrix::of(m));
}

oracle::Mat to_oracle(const IntMatrix& m) {
  oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

/// Z -> Z^2 -> Z twice, with the given verticals.
SnakeDiagram<AbMorphism> standard_rows(const AbMorphism& f1, const AbMorphism& f2, const AbMorphism& f3) {
  const AbMorphism phi1 = hom(Z(), Z(2), {{1}, {0}});
  const AbMorphism phi2 = hom(Z(2), Z(), {{0, 1}});
  return make_snake_diagram(cat, phi1, phi2, phi1, phi2, f1, f2, f3);
}

/// Compares delta with the element chase on every generator of K3.
void expect_delta_matches_chase(const SnakeDiagram<AbMorphism>& d, const SnakeResult<AbMorphism>& r) {
  const AbMorphism& k3 = d.f3.kernel;
  const AbMorphism& c1 = d.f1.cokernel;
  for (std::size_t j = 0; j < k3.source().generators(); ++j) {
    oracle::Vec x(k3.target().generators());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = k3.matrix()(i, j).get_si();
    const auto y = oracle::connecting_map(to_oracle(d.phi2.matrix()), d.phi2.source().generators(),
                                          to_oracle(d.f2.morphism.matrix()), to_oracle(d.phi1p.matrix()),
                                          d.phi1p.source().generators(), x);
    ASSERT_TRUE(y.has_value());
    IntMatrix yc(y->size(), 1);
    for (std::size_t i = 0; i < y->size(); ++i) yc(i, 0) = static_cast<long>((*y)[i]);
    EXPECT_EQ(r.delta.matrix().column(j), c1.target().reduce(c1.matrix() * yc)) << "generator " << j;
  }
}

}  // namespace

TEST(Snake, ZeroDeltaFixture) {
  const auto d = standard_rows(hom(Z(), Z(), {{2}}), hom(Z(2), Z(2), {{2, 0}, {0, 3}}), hom(Z(), Z(), {{3}}));
  const auto r = snake(cat, d);
  EXPECT_TRUE(is_zero_object(cat, r.psi1.source()));
  EXPECT_TRUE(is_zero_object(cat, r.psi2.source()));
  EXPECT_TRUE(is_zero_object(cat, r.delta.source()));
  EXPECT_EQ(r.psi1p.source().invariants().to_string(), "Z/2");
  EXPECT_EQ(r.psi1p.target().invariants().to_string(), "Z/6");
  EXPECT_EQ(r.psi2p.target().invariants().to_string(), "Z/3");
  EXPECT_TRUE(cat.is_zero(r.delta));
  EXPECT_TRUE(r.exactness.exact) << r.exactness.clause;
  EXPECT_TRUE(r.psi1_inflation);
  EXPECT_TRUE(r.psi2p_deflation);
  expect_delta_matches_chase(d, r);
}

TEST(Snake, ModTwoDeltaFixture) {
  const auto d = standard_rows(hom(Z(), Z(), {{2}}), hom(Z(2), Z(2), {{2, 1}, {0, 0}}), hom(Z(), Z(), {{0}}));
  const auto r = snake(cat, d);
  EXPECT_EQ(r.delta.source(), Z());
  EXPECT_EQ(r.delta.target(), Zmod(2));
  EXPECT_EQ(r.delta.matrix(), IntMatrix::of({{1}}));
  EXPECT_TRUE(cat.is_deflation(r.delta));
  EXPECT_EQ(r.psi2.matrix(), IntMatrix::of({{-2}}));
  EXPECT_EQ(r.psi1p.target().invariants().to_string(), "Z");
  EXPECT_TRUE(is_isomorphism(cat, r.psi2p));
  EXPECT_TRUE(r.exactness.exact) << r.exactness.clause;
  expect_delta_matches_chase(d, r);
}

TEST(Snake, IdentityVerticalsGiveZeroSequence) {
  const auto d = standard_rows(cat.identity(Z()), cat.identity(Z(2)), cat.identity(Z()));
  const auto r = snake(cat, d);
  for (const auto& m : r.sequence) {
    EXPECT_TRUE(is_zero_object(cat, m.source()));
    EXPECT_TRUE(is_zero_object(cat, m.target()));
  }
  EXPECT_TRUE(r.exactness.exact);
}

TEST(Snake, NonCommutingSquareIsAHypothesisViolation) {
  const auto d = standard_rows(hom(Z(), Z(), {{2}}), hom(Z(2), Z(2), {{3, 0}, {0, 3}}), hom(Z(), Z(), {{3}}));
  try {
    snake(cat, d);
    FAIL() << "expected a hypothesis violation";
  } catch (const HypothesisViolation& e) {
    EXPECT_EQ(e.clause(), "left square does not commute");
  }
}

TEST(Snake, RandomDiagramsAreExactAndMatchTheChase) {
  FgabDiagramSampler sampler(11);
  for (int n = 0; n < 40; ++n) {
    const auto d = sampler.snake_diagram();
    const auto r = snake(cat, d);
    ASSERT_TRUE(r.exactness.exact) << n << ": " << r.exactness.clause;
    ASSERT_TRUE(r.psi1_inflation);
    ASSERT_TRUE(r.psi2p_deflation);
  }
}

TEST(Snake, DeltaIsNatural) {
  FgabDiagramSampler sampler(5);
  for (int n = 0; n < 15; ++n) {
    const auto pair = sampler.snake_diagram_pair();
    const auto rep = delta_naturality(cat, pair.source, pair.target, pair.map);
    ASSERT_TRUE(rep.commutes) << n;
  }
}

TEST(InflationCancellation, TwoThenThree) {
  const auto w = inflation_cancellation(cat, hom(Z(), Z(), {{2}}), hom(Z(), Z(), {{3}}));
  EXPECT_EQ(w.p_prime.source().invariants().to_string(), "Z/6");
  EXPECT_EQ(w.p_prime.target().invariants().to_string(), "Z/3");
  EXPECT_TRUE(cat.is_deflation(w.p_prime));
  EXPECT_EQ(w.m.target().invariants().to_string(), "Z/2");
}

TEST(InflationCancellation, IdentityHasZeroCokernel) {
  const auto w = inflation_cancellation(cat, cat.identity(Z()), hom(Z(), Z(), {{3}}));
  EXPECT_TRUE(is_isomorphism(cat, w.p_prime));
  EXPECT_TRUE(is_zero_object(cat, w.m.target()));
}

TEST(InflationCancellation, PointedInjections) {
  const pointed::PointedSetsCategory pc;
  std::size_t cases = 0;
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; b <= 4; ++b)
      for (std::size_t c = 1; c <= 4; ++c)
        for (const auto& g : pc.enumerate_morphisms(pointed::PointedSet{b}, pointed::PointedSet{c})) {
          if (!pc.is_injective(g)) continue;
          for (const auto& f : pc.enumerate_morphisms(pointed::PointedSet{a}, pointed::PointedSet{b})) {
            if (!pc.is_injective(pc.compose(g, f))) continue;
            const auto w = inflation_cancellation(pc, f, g);
            ASSERT_TRUE(check_short_exact(pc, f, w.m).holds);
            ASSERT_TRUE(is_isomorphism(pc, pc.cokernel_colift(f, pc.cokernel(f), w.m)));
            ++cases;
          }
        }
  EXPECT_GT(cases, 0u);
}

TEST(SnakeExtended, DegenerateExtensionEqualsSnake) {
  const auto d = standard_rows(hom(Z(), Z(), {{2}}), hom(Z(2), Z(2), {{2, 1}, {0, 0}}), hom(Z(), Z(), {{0}}));
  const auto r = snake_extended(cat, d, cat.identity(Z()), cat.identity(Z()));
  EXPECT_TRUE(r.exactness.exact) << r.exactness.clause;
  EXPECT_EQ(r.sequence[2], r.base.delta);
  EXPECT_TRUE(is_identity(cat, r.v));
  EXPECT_TRUE(is_identity(cat, r.u));
}

TEST(SnakeExtended, NonDeflationIsRejected) {
  const auto d = standard_rows(hom(Z(), Z(), {{2}}), hom(Z(2), Z(2), {{2, 1}, {0, 0}}), hom(Z(), Z(), {{0}}));
  try {
    snake_extended(cat, d, hom(Z(), Z(), {{3}}), cat.identity(Z()));
    FAIL() << "expected a hypothesis violation";
  } catch (const HypothesisViolation& e) {
    EXPECT_EQ(e.clause(), "a not a deflation");
  }
}

TEST(SnakeExtended, DeflationAndInflation) {
  const auto d = standard_rows(hom(Z(), Z(), {{2}}), hom(Z(2), Z(2), {{2, 1}, {0, 0}}), hom(Z(), Z(), {{0}}));
  const auto r = snake_extended(cat, d, hom(Z(2), Z(), {{1, 3}}), hom(Z(), Z(), {{5}}));
  EXPECT_EQ(r.k1_ext.source().invariants().to_string(), "Z");
  EXPECT_TRUE(cat.is_deflation(r.v));
  EXPECT_TRUE(cat.is_zero(r.v));
  EXPECT_EQ(r.u.target(), Z());
  EXPECT_EQ(r.u.matrix(), IntMatrix::of({{5}}));
  EXPECT_TRUE(r.exactness.exact) << r.exactness.clause;
}

TEST(LongExact, Examples) {
  const AbMorphism two = hom(Z(), Z(), {{2}});
  auto facs = [](const std::vector<AbMorphism>& seq) {
    std::vector<AdmissibleFactorization<AbMorphism>> out;
    for (const auto& f : seq) out.push_back(*cat.admissible_factorization(f));
    return out;
  };
  const std::vector<AbMorphism> id_seq = {cat.from_zero(Z(2)), cat.identity(Z(2))};
  EXPECT_TRUE(check_long_exact(cat, id_seq, facs(id_seq)).exact);

  const std::vector<AbMorphism> good = {two, hom(Z(), Zmod(2), {{1}}), cat.to_zero(Zmod(2))};
  EXPECT_TRUE(check_long_exact(cat, good, facs(good)).exact);

  const std::vector<AbMorphism> bad = {two, hom(Z(), Zmod(4), {{1}}), cat.to_zero(Zmod(4))};
  const auto r = check_long_exact(cat, bad, facs(bad));
  EXPECT_FALSE(r.exact);
  ASSERT_TRUE(r.failing_object.has_value());
  EXPECT_EQ(*r.failing_object, 1u);
  EXPECT_EQ(r.clause, kNotCokernel);

  EXPECT_THROW(check_long_exact(cat, good, facs(bad)), ContractViolation);
}

TEST(KernelSequence, IdentityVerticals) {
  const AbMorphism phi1 = hom(Z(), Z(2), {{1}, {0}});
  const AbMorphism phi2 = hom(Z(2), Z(), {{0, 1}});
  const auto r = induced_kernel_sequence(
      cat, KernelGridInput<AbMorphism>{phi1, phi2, phi1, phi2, cat.identity(Z()), cat.identity(Z(2)), cat.identity(Z())});
  EXPECT_TRUE(r.verdict.holds);
  EXPECT_TRUE(is_zero_object(cat, r.psi1.source()));
  EXPECT_TRUE(r.paths_agree);
}

TEST(KernelSequence, ModTwoReductions) {
  const AbMorphism phi1 = hom(Z(), Z(2), {{1}, {0}});
  const AbMorphism phi2 = hom(Z(2), Z(), {{0, 1}});
  const FpAbelianGroup z2 = Zmod(2);
  const FpAbelianGroup z22 = FpAbelianGroup::canonical({2, 2}, 0);
  const AbMorphism q1 = hom(Z(), z2, {{1}});
  const AbMorphism q2 = hom(Z(2), z22, {{1, 0}, {0, 1}});
  const auto r = induced_kernel_sequence(cat, KernelGridInput<AbMorphism>{phi1, phi2, hom(z2, z22, {{1}, {0}}),
                                                                          hom(z22, z2, {{0, 1}}), q1, q2, q1});
  EXPECT_TRUE(r.verdict.holds);
  EXPECT_EQ(r.k1.matrix(), IntMatrix::of({{2}}));
  EXPECT_EQ(r.k2.matrix(), IntMatrix::of({{2, 0}, {0, 2}}));
  EXPECT_TRUE(r.paths_agree) << r.path_b_unavailable;
}

TEST(KernelSequence, RandomPathsAgree) {
  FgabDiagramSampler sampler(3);
  for (int n = 0; n < 30; ++n) {
    const auto r = induced_kernel_sequence(cat, sampler.kernel_grid());
    ASSERT_TRUE(r.verdict.holds) << r.verdict.clause;
    ASSERT_TRUE(r.path_b_unavailable.empty()) << r.path_b_unavailable;
    ASSERT_TRUE(r.paths_agree) << n;
  }
}

TEST(ThreeByThree, DualOnRandomGrids) {
  FgabDiagramSampler sampler(8);
  for (int n = 0; n < 100; ++n) {
    const auto g = sampler.grid();
    const auto r = three_by_three_dual(cat, g);
    ASSERT_TRUE(r.verdict.holds) << n << ": " << r.verdict.clause;
  }
}

TEST(ThreeByThree, FullOnRandomGrids) {
  FgabDiagramSampler sampler(9);
  for (int n = 0; n < 50; ++n) {
    const auto r = full_three_by_three(cat, sampler.grid());
    ASSERT_TRUE(r.verdict.holds) << n << ": " << r.verdict.clause;
    ASSERT_TRUE(is_isomorphism(cat, r.psi));
  }
}

TEST(ThreeByThree, FullGridWithRankThreeMiddle) {
  // columns Z = Z -> 0, Z^2 -> Z^3 -> Z, Z -> Z^2 -> Z; middle row Z -> Z^3 -> Z^2
  const Grid3x3<AbMorphism> g{hom(Z(), Z(2), {{1}, {0}}),
                              hom(Z(2), Z(), {{0, 1}}),
                              hom(Z(), Z(3), {{1}, {0}, {0}}),
                              hom(Z(3), Z(2), {{0, 0, 1}, {0, 1, 0}}),
                              cat.from_zero(Z()),
                              cat.identity(Z()),
                              cat.identity(Z()),
                              hom(Z(2), Z(3), {{1, 0}, {0, 1}, {0, 0}}),
                              hom(Z(), Z(2), {{0}, {1}}),
                              cat.to_zero(Z()),
                              hom(Z(3), Z(), {{0, 0, 1}}),
                              hom(Z(2), Z(), {{1, 0}})};
  const auto r = full_three_by_three(cat, g);
  EXPECT_TRUE(r.verdict.holds) << r.verdict.clause;
}

TEST(ThreeByThree, SplitGrid) {
  // A-row Z -> Z^2 -> Z, C-row Z -> Z^2 -> Z, middle row their sum
  const AbMorphism i = hom(Z(), Z(2), {{1}, {0}});
  const AbMorphism p = hom(Z(2), Z(), {{0, 1}});
  const AbMorphism ii = hom(Z(2), Z(4), {{1, 0}, {0, 0}, {0, 1}, {0, 0}});
  const AbMorphism pp = hom(Z(4), Z(2), {{0, 1, 0, 0}, {0, 0, 0, 1}});
  const AbMorphism up1 = hom(Z(), Z(2), {{1}, {0}});
  const AbMorphism up2 = hom(Z(2), Z(4), {{1, 0}, {0, 1}, {0, 0}, {0, 0}});
  const AbMorphism dn1 = hom(Z(2), Z(), {{0, 1}});
  const AbMorphism dn2 = hom(Z(4), Z(2), {{0, 0, 1, 0}, {0, 0, 0, 1}});
  const Grid3x3<AbMorphism> g{i, p, ii, pp, i, p, up1, up2, up1, dn1, dn2, dn1};
  EXPECT_TRUE(full_three_by_three(cat, g).verdict.holds);
  EXPECT_TRUE(three_by_three_dual(cat, g).verdict.holds);

  Grid3x3<AbMorphism> broken = g;
  broken.b1 = hom(Z(2), Z(4), {{1, 0}, {0, 0}, {0, 1}, {0, 1}});
  EXPECT_THROW(full_three_by_three(cat, broken), HypothesisViolation);
}

TEST(Axioms, FgabRandomized) {
  FgabDiagramSampler sampler(21);
  const auto report = verify_axioms_randomized(cat, sampler, RandomizedOptions{40, 20});
  for (const auto& a : report.axioms) EXPECT_EQ(a.status, Status::Pass) << a.axiom << " " << a.counterexample << a.note;
}

TEST(Axioms, PointedSetsUpToThree) {
  const pointed::PointedSetsCategory pc;
  const auto report = verify_axioms_exhaustive(pc, ExhaustiveOptions{3});
  for (const auto& a : report.axioms) {
    if (a.axiom == "4a") {
      EXPECT_EQ(a.status, Status::Fail);
      EXPECT_NE(a.counterexample.find("P2 -> P1"), std::string::npos) << a.counterexample;
    } else {
      EXPECT_EQ(a.status, Status::Pass) << a.axiom << " " << a.counterexample;
    }
  }
}

TEST(Axioms, AllSurjectionsBreakAxiomOne) {
  const pointed::PointedSetsCategory pc(pointed::DeflationClass::AllSurjections);
  ExhaustiveVerifier<pointed::PointedSetsCategory> v(pc, ExhaustiveOptions{3});
  const auto a1 = v.axiom1();
  EXPECT_EQ(a1.status, Status::Fail);
  EXPECT_NE(a1.counterexample.find("P3 -> P2 [0, 1, 1]"), std::string::npos) << a1.counterexample;
}

TEST(Axioms, BudgetExhaustionIsInconclusive) {
  const pointed::PointedSetsCategory pc;
  ExhaustiveVerifier<pointed::PointedSetsCategory> v(pc, ExhaustiveOptions{3, 5});
  EXPECT_EQ(v.axiom2().status, Status::Inconclusive);
}

TEST(Snake, PointedSetsExhaustiveUpToThree) {
  const pointed::PointedSetsCategory pc;
  using pointed::PointedMap;
  using pointed::PointedSet;
  std::vector<std::pair<PointedMap, PointedMap>> rows;
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b)
      for (std::size_t c = 1; c <= 3; ++c)
        for (const auto& p : pc.enumerate_morphisms(PointedSet{b}, PointedSet{c}))
          for (const auto& i : pc.enumerate_morphisms(PointedSet{a}, PointedSet{b}))
            if (pc.is_deflation(p) && check_short_exact(pc, i, p).holds) rows.emplace_back(i, p);
  std::size_t diagrams = 0;
  for (const auto& [phi1, phi2] : rows)
    for (const auto& [phi1p, phi2p] : rows)
      for (const auto& f2 : pc.enumerate_morphisms(phi2.source, phi2p.source)) {
        std::optional<PointedMap> f1, f3;
        for (const auto& x : pc.enumerate_morphisms(phi1.source, phi1p.source))
          if (pc.compose(phi1p, x) == pc.compose(f2, phi1)) f1 = x;
        for (const auto& x : pc.enumerate_morphisms(phi2.target, phi2p.target))
          if (pc.compose(x, phi2) == pc.compose(phi2p, f2)) f3 = x;
        if (!f1 || !f3) continue;
        const auto a1 = pc.admissible_factorization(*f1);
        const auto a2 = pc.admissible_factorization(f2);
        const auto a3 = pc.admissible_factorization(*f3);
        if (!a1 || !a2 || !a3) continue;
        const SnakeDiagram<PointedMap> d{phi1, phi2, phi1p, phi2p, *a1, *a2, *a3};
        const auto r = snake(pc, d);
        ASSERT_TRUE(r.exactness.exact) << pc.describe(f2) << ": " << r.exactness.clause;
        ASSERT_TRUE(r.psi1_inflation);
        ASSERT_TRUE(r.psi2p_deflation);
        ++diagrams;
      }
  EXPECT_GT(diagrams, 100u);
}
