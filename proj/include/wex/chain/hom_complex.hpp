#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wex/chain/cohomology.hpp"
#include "wex/fgab/category.hpp"
#include "wex/fgab/random.hpp"

namespace wex::chain {

using FgabComplex = Complex<fgab::FgabCategory>;
using FgabChainMap = ChainMap<fgab::FgabCategory>;

/// Complex of free groups Z^ranks[k] in degrees lo, lo+1, ... with the given
/// differential matrices (rows index the target).
FgabComplex free_complex(int lo, const std::vector<std::size_t>& ranks, const std::vector<fgab::IntMatrix>& d);

/// Complex over the given groups; d[k] is the matrix of A_{lo+k} -> A_{lo+k+1}.
FgabComplex fgab_complex(int lo, const std::vector<fgab::FpAbelianGroup>& objects,
                         const std::vector<fgab::IntMatrix>& d);

/// Invariants of H^i for every i in the window.
std::vector<fgab::Invariants> cohomology_invariants(const FgabComplex& x);

/// Alternating sum of free ranks of the objects, resp. of the H^i.
long euler_characteristic(const FgabComplex& x);
long cohomology_euler_characteristic(const FgabComplex& x);

/// f_i: A_i -> B_{i+degree} for every i in the source window.
struct GradedMorphism {
  int degree = 0;
  int lo = 0;
  std::vector<fgab::AbMorphism> components;
};

/// f_i, or the zero map when i lies outside the source window.
fgab::AbMorphism graded_component(const FgabComplex& a, const FgabComplex& b, const GradedMorphism& f, int i);
/// (-1)^deg(f) f.
GradedMorphism epsilon(const GradedMorphism& f);
/// Defined only for equal degrees; throws ContractViolation otherwise.
GradedMorphism graded_add(const GradedMorphism& f, const GradedMorphism& g);
GradedMorphism graded_negate(const GradedMorphism& f);
/// g f for f: A -> B, g: B -> C; degrees add.
GradedMorphism graded_compose(const FgabComplex& a, const FgabComplex& b, const FgabComplex& c,
                              const GradedMorphism& g, const GradedMorphism& f);
/// The differential of a complex as a graded morphism of degree 1.
GradedMorphism differential_of(const FgabComplex& a);
GradedMorphism graded_identity(const FgabComplex& a);
GradedMorphism graded_zero(const FgabComplex& a, const FgabComplex& b, int degree);
bool graded_equal(const GradedMorphism& f, const GradedMorphism& g);
FgabChainMap to_chain_map(const FgabComplex& a, const FgabComplex& b, const GradedMorphism& f);

/// Hom(A, B) for complexes of free groups: Hom_k is the product over i of
/// Hom(A_i, B_{i+k}), encoded as a free group, with df = f d_A - d_B eps(f).
class HomComplex {
 public:
  HomComplex(FgabComplex a, FgabComplex b);

  const FgabComplex& source() const { return a_; }
  const FgabComplex& target() const { return b_; }
  /// Degrees lo..hi as a complex of free groups.
  const FgabComplex& complex() const { return hom_; }
  int lo() const { return hom_.lo; }
  int hi() const { return hom_.hi(); }
  std::size_t rank(int k) const;

  /// Column vector of f in Hom_{deg f}.
  fgab::IntMatrix encode(const GradedMorphism& f) const;
  GradedMorphism decode(int k, const fgab::IntMatrix& column) const;
  /// f d_A - d_B eps(f), computed on components.
  GradedMorphism d(const GradedMorphism& f) const;
  /// Matrix of d: Hom_k -> Hom_{k+1}.
  fgab::IntMatrix d_matrix(int k) const;

  bool is_cycle(const GradedMorphism& f) const;
  /// Some s with d s = f, if f is a boundary.
  std::optional<GradedMorphism> primitive(const GradedMorphism& f) const;

 private:
  struct Block {
    int i;  // source degree
    std::size_t rows, cols, offset;
  };
  std::vector<Block> blocks(int k) const;

  FgabComplex a_, b_;
  FgabComplex hom_;
};

HomComplex hom_complex(const FgabComplex& a, const FgabComplex& b);

/// f, g degree-0 cycles with f - g a boundary.
bool homotopy_equal(const HomComplex& h, const GradedMorphism& f, const GradedMorphism& g);

/// H^i(f) for every i in the joint window of source and target; rejects
/// anything but a degree-0 cycle.
std::vector<fgab::AbMorphism> homotopy_class_map(const HomComplex& h, const GradedMorphism& f);

bool is_quasi_isomorphism(const FgabComplex& a, const FgabComplex& b, const GradedMorphism& f);

/// Evidence for the weak variant over a finite sample of test complexes X:
/// Hom(X, A) -> Hom(X, B), g |-> f g, must induce isomorphisms on every H^k.
/// The verdict is SAMPLED, never universal.
struct WeakQuasiIsoReport {
  bool holds = true;
  std::size_t samples = 0;
  std::optional<std::size_t> failing_sample;
  std::optional<int> failing_degree;
};

WeakQuasiIsoReport is_weakly_quasi_isomorphism(const FgabComplex& a, const FgabComplex& b, const GradedMorphism& f,
                                               const std::vector<FgabComplex>& test_objects);

/// The chain map Hom(X, A) -> Hom(X, B) of post-composition with f.
FgabChainMap post_composition(const HomComplex& xa, const HomComplex& xb, const GradedMorphism& f);

// ---------------------------------------------------------------------------
// Random complexes.

struct ComplexOptions {
  std::size_t max_length = 4;
  std::size_t max_rank = 3;
  long max_entry = 3;
};

struct PointwiseSes {
  FgabComplex a, a1, a2;
  FgabChainMap u, v;
};

struct QuasiIsoSample {
  FgabComplex a, b;
  GradedMorphism f;
};

class ComplexSampler {
 public:
  explicit ComplexSampler(std::uint64_t seed, ComplexOptions options = {});

  /// Free complex with window [lo, lo + length - 1].
  FgabComplex free_complex(int lo, std::size_t length);
  FgabComplex free_complex();
  /// One of: X --m--> X --> X/m, X/m --m--> X/m^2 --> X/m, or a block
  /// triangular extension A --> A (+) A'' --> A''.
  PointwiseSes pointwise_ses();
  /// Chain maps homotopic to an inclusion into, or a projection from, a sum
  /// with an elementary acyclic complex.
  QuasiIsoSample quasi_isomorphism();
  /// Random element of Z^k(A, B).
  GradedMorphism cycle(const HomComplex& h, int k);

  fgab::FgabSampler& base() { return base_; }

 private:
  fgab::IntMatrix small_matrix(std::size_t rows, std::size_t cols);

  fgab::FgabSampler base_;
  ComplexOptions options_;
};

}  // namespace wex::chain
