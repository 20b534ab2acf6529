#include "wex/fgab/diagrams.hpp"

namespace wex::fgab {

FgabDiagramSampler::FgabDiagramSampler(std::uint64_t seed, SamplerOptions options) : base_(seed, options) {}

AbMorphism FgabDiagramSampler::isomorphism(const FpAbelianGroup& a) {
  const std::size_t n = a.generators();
  IntMatrix u = IntMatrix::identity(n);
  if (n >= 2) {
    for (int step = 0; step < 4; ++step) {
      const std::size_t i = base_.index(n - 1);
      std::size_t j = base_.index(n - 2);
      if (j >= i) ++j;
      u.add_row_multiple(i, j, Integer(base_.entry(2)));
      if (base_.index(1) == 1) u.negate_row(i);
    }
  }
  const FpAbelianGroup b(n, u * a.relations());
  return AbMorphism(a, b, u);
}

AbMorphism FgabDiagramSampler::deflation_from(const FpAbelianGroup& b) {
  return cat_.cokernel(base_.morphism(object(), b));
}

AbMorphism FgabDiagramSampler::subgroup_containing(const AbMorphism& f) {
  const FpAbelianGroup b = f.target();
  const FpAbelianGroup x = object();
  const DirectSum s = cat_.direct_sum({f.source(), x});
  const AbMorphism g = cat_.add(cat_.compose(f, s.projections[0]),
                                cat_.compose(base_.morphism(x, b), s.projections[1]));
  return cat_.admissible_factorization(g)->inflation_part;
}

engine::Grid3x3<AbMorphism> FgabDiagramSampler::grid() {
  // Middle row B1 -> B2 -> B3, a subgroup A2 of B2; everything else is
  // intersections and quotients.
  const auto row = base_.short_exact();
  const AbMorphism& b1 = row.inflation;
  const AbMorphism& b2 = row.deflation;
  const FpAbelianGroup bb2 = b1.target();
  const AbMorphism f2 = cat_.admissible_factorization(base_.morphism(object(), bb2))->inflation_part;
  const AbMorphism g2 = cat_.cokernel(f2);
  const AbMorphism g2b1 = cat_.compose(g2, b1);
  const AbMorphism f1 = cat_.kernel(g2b1);
  const AbMorphism g1 = cat_.cokernel(f1);
  const AbMorphism c1 = cat_.cokernel_colift(f1, g1, g2b1);
  const AbMorphism c2 = cat_.cokernel(c1);
  const AbMorphism g3 = cat_.cokernel_colift(b1, b2, cat_.compose(c2, g2));
  const AbMorphism f3 = cat_.kernel(g3);
  const AbMorphism a1 = cat_.kernel_lift(g2, f2, cat_.compose(b1, f1));
  const AbMorphism a2 = cat_.kernel_lift(g3, f3, cat_.compose(b2, f2));
  return {a1, a2, b1, b2, c1, c2, f1, f2, f3, g1, g2, g3};
}

std::tuple<AbMorphism, AbMorphism, AbMorphism> FgabDiagramSampler::four_b_input() {
  const FpAbelianGroup a3 = object();
  const AbMorphism phi2p = deflation_onto(a3);
  const FpAbelianGroup b2 = phi2p.source();
  const FpAbelianGroup x = object();
  const DirectSum s = cat_.direct_sum({b2, x});
  const Integer k = base_.index(2) + 1;
  const AbMorphism f2 = cat_.add(cat_.scale(k, s.projections[0]),
                                 cat_.compose(base_.morphism(x, b2), s.projections[1]));
  return {cat_.compose(phi2p, f2), phi2p, f2};
}

FgabDiagramSampler::Rows FgabDiagramSampler::complete(const AbMorphism& phi1, const AbMorphism& phi2,
                                                      const AbMorphism& f2) {
  const AbMorphism f2phi1 = cat_.compose(f2, phi1);
  // Half the time B1 also contains f2(w) for random w in A2; only then can
  // delta be nonzero.
  AbMorphism phi1p = f2phi1;
  if (base_.index(1) == 0) {
    const FpAbelianGroup x = object();
    const DirectSum s = cat_.direct_sum({phi1.source(), x});
    const AbMorphism w = cat_.compose(f2, base_.morphism(x, phi1.target()));
    phi1p = cat_.admissible_factorization(
                    cat_.add(cat_.compose(f2phi1, s.projections[0]), cat_.compose(w, s.projections[1])))
                ->inflation_part;
  } else {
    phi1p = subgroup_containing(f2phi1);
  }
  const AbMorphism phi2p = cat_.cokernel(phi1p);
  const AbMorphism f1 = cat_.kernel_lift(phi2p, phi1p, f2phi1);
  const AbMorphism f3 = cat_.cokernel_colift(phi1, phi2, cat_.compose(phi2p, f2));
  return {phi1, phi2, phi1p, phi2p, f1, f2, f3};
}

engine::SnakeDiagram<AbMorphism> FgabDiagramSampler::factor(const Rows& r) const {
  return engine::make_snake_diagram(cat_, r.phi1, r.phi2, r.phi1p, r.phi2p, r.f1, r.f2, r.f3);
}

engine::SnakeDiagram<AbMorphism> FgabDiagramSampler::snake_diagram() {
  const auto top = base_.short_exact();
  const AbMorphism f2 = base_.morphism(top.inflation.target(), object());
  return factor(complete(top.inflation, top.deflation, f2));
}

SnakeDiagramPair FgabDiagramSampler::snake_diagram_pair() {
  const auto top = base_.short_exact();
  const FpAbelianGroup aa2 = top.inflation.target();
  const AbMorphism f2 = base_.morphism(aa2, object());
  const Rows d = complete(top.inflation, top.deflation, f2);
  const FpAbelianGroup bb2 = f2.target();

  // A2' = U ⊕ A2 with a2 = (u, id); B2' arbitrary with b2 random; then
  // f2' = [t, b2 f2 - t u] satisfies f2' a2 = b2 f2.
  const FpAbelianGroup u_obj = object();
  const DirectSum s = cat_.direct_sum({u_obj, aa2});
  const AbMorphism u = base_.morphism(aa2, u_obj);
  const AbMorphism a2 = cat_.add(cat_.compose(s.inclusions[0], u), s.inclusions[1]);
  const FpAbelianGroup bb2p = object();
  const AbMorphism b2 = base_.morphism(bb2, bb2p);
  const AbMorphism t = base_.morphism(u_obj, bb2p);
  const AbMorphism f2p = cat_.add(cat_.compose(t, s.projections[0]),
                                  cat_.compose(cat_.subtract(cat_.compose(b2, f2), cat_.compose(t, u)),
                                               s.projections[1]));

  // Top row of the target: a subgroup of A2' containing a2(A1).
  const AbMorphism phi1e = subgroup_containing(cat_.compose(a2, d.phi1));
  const AbMorphism phi2e = cat_.cokernel(phi1e);
  // Bottom row of the target: a subgroup of B2' containing b2(B1) and f2'(A1').
  const DirectSum t_sum = cat_.direct_sum({d.phi1p.source(), phi1e.source()});
  const AbMorphism both = cat_.add(cat_.compose(cat_.compose(b2, d.phi1p), t_sum.projections[0]),
                                   cat_.compose(cat_.compose(f2p, phi1e), t_sum.projections[1]));
  const AbMorphism phi1pe = subgroup_containing(both);
  const AbMorphism phi2pe = cat_.cokernel(phi1pe);
  const AbMorphism f1e = cat_.kernel_lift(phi2pe, phi1pe, cat_.compose(f2p, phi1e));
  const AbMorphism f3e = cat_.cokernel_colift(phi1e, phi2e, cat_.compose(phi2pe, f2p));
  const Rows e{phi1e, phi2e, phi1pe, phi2pe, f1e, f2p, f3e};

  const AbMorphism a1 = cat_.kernel_lift(phi2e, phi1e, cat_.compose(a2, d.phi1));
  const AbMorphism a3 = cat_.cokernel_colift(d.phi1, d.phi2, cat_.compose(phi2e, a2));
  const AbMorphism b1 = cat_.kernel_lift(phi2pe, phi1pe, cat_.compose(b2, d.phi1p));
  const AbMorphism b3 = cat_.cokernel_colift(d.phi1p, d.phi2p, cat_.compose(phi2pe, b2));
  return {factor(d), factor(e), {a1, a2, a3, b1, b2, b3}};
}

engine::KernelGridInput<AbMorphism> FgabDiagramSampler::kernel_grid() {
  const auto top = base_.short_exact();
  const AbMorphism f2 = deflation_from(top.inflation.target());
  const auto image = cat_.admissible_factorization(cat_.compose(f2, top.inflation));
  const AbMorphism& phi1p = image->inflation_part;
  const AbMorphism& f1 = image->deflation_part;
  const AbMorphism phi2p = cat_.cokernel(phi1p);
  const AbMorphism f3 = cat_.cokernel_colift(top.inflation, top.deflation, cat_.compose(phi2p, f2));
  return {top.inflation, top.deflation, phi1p, phi2p, f1, f2, f3};
}

}  // namespace wex::fgab
