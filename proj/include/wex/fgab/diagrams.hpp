#pragma once

#include <cstdint>
#include <tuple>

#include "wex/engine/snake.hpp"
#include "wex/engine/three_by_three.hpp"
#include "wex/fgab/random.hpp"

namespace wex::fgab {

/// A snake diagram together with a morphism into a second one.
struct SnakeDiagramPair {
  engine::SnakeDiagram<AbMorphism> source;
  engine::SnakeDiagram<AbMorphism> target;
  engine::SnakeMorphism<AbMorphism> map;
};

/// Random diagrams built top-down, so that every hypothesis holds by
/// construction: rows are images and cokernels, connecting maps are lifts.
class FgabDiagramSampler {
 public:
  explicit FgabDiagramSampler(std::uint64_t seed, SamplerOptions options = {});

  FpAbelianGroup object() { return base_.group(); }
  AbMorphism morphism(const FpAbelianGroup& a, const FpAbelianGroup& b) { return base_.morphism(a, b); }
  /// Isomorphism onto a random change of presentation of a.
  AbMorphism isomorphism(const FpAbelianGroup& a);
  /// Cokernel of a random morphism into b.
  AbMorphism deflation_from(const FpAbelianGroup& b);
  AbMorphism deflation_onto(const FpAbelianGroup& c) { return base_.short_exact_onto(c).deflation; }
  /// Inclusion of the subgroup generated by the image of `f` and a random
  /// morphism into target(f).
  AbMorphism subgroup_containing(const AbMorphism& f);

  /// Short exact columns, short exact lower rows; the top row is induced.
  engine::Grid3x3<AbMorphism> grid();
  /// (phi2, phi2', f2) with phi2' a deflation and phi2 = phi2' f2.
  std::tuple<AbMorphism, AbMorphism, AbMorphism> four_b_input();

  engine::SnakeDiagram<AbMorphism> snake_diagram();
  /// A random diagram, a second one and a morphism between them.
  SnakeDiagramPair snake_diagram_pair();
  engine::KernelGridInput<AbMorphism> kernel_grid();

  FgabSampler& base() { return base_; }

 private:
  struct Rows {
    AbMorphism phi1, phi2, phi1p, phi2p, f1, f2, f3;
  };
  /// Bottom row through B2 containing f2(A1), and the induced verticals.
  Rows complete(const AbMorphism& phi1, const AbMorphism& phi2, const AbMorphism& f2);
  engine::SnakeDiagram<AbMorphism> factor(const Rows& r) const;

  FgabSampler base_;
  FgabCategory cat_;
};

}  // namespace wex::fgab
