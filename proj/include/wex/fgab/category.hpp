#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wex/core/category.hpp"
#include "wex/core/exactness.hpp"
#include "wex/fgab/group.hpp"

namespace wex::fgab {

/// Direct sum with its structure maps; inclusions[k] and projections[k] belong
/// to the k-th summand.
struct DirectSum {
  FpAbelianGroup object;
  std::vector<AbMorphism> inclusions;
  std::vector<AbMorphism> projections;
};

/// Hom(A, B) of free groups as a free group Z^(m*n): the morphism with matrix
/// M (m x n) corresponds to the vector of its entries in row-major order.
struct FreeHom {
  FpAbelianGroup source;
  FpAbelianGroup target;
  FpAbelianGroup group;

  IntMatrix encode(const AbMorphism& f) const;
  AbMorphism decode(const IntMatrix& column) const;
};

/// Finitely presented abelian groups. Every morphism is admissible: the
/// deflations are the surjections and the inflations the injections.
///
/// Kernels and cokernels come back in canonical presentation. A zero morphism
/// has the identity as kernel and as cokernel.
class FgabCategory {
 public:
  using Object = FpAbelianGroup;
  using Morphism = AbMorphism;

  Object zero_object() const { return FpAbelianGroup(); }
  bool same_object(const Object& a, const Object& b) const { return a == b; }
  Object source(const Morphism& f) const { return f.source(); }
  Object target(const Morphism& f) const { return f.target(); }
  Morphism identity(const Object& a) const;
  Morphism compose(const Morphism& g, const Morphism& f) const;
  bool equal(const Morphism& f, const Morphism& g) const { return f == g; }
  Morphism to_zero(const Object& a) const;
  Morphism from_zero(const Object& a) const;
  /// Surjectivity.
  bool is_deflation(const Morphism& f) const;
  Morphism kernel(const Morphism& f) const;
  Morphism cokernel(const Morphism& f) const;
  Morphism kernel_lift(const Morphism& p, const Morphism& k, const Morphism& g) const;
  Morphism cokernel_colift(const Morphism& i, const Morphism& c, const Morphism& g) const;
  std::string describe(const Object& a) const { return a.to_string(); }
  std::string describe(const Morphism& f) const { return f.to_string(); }

  PullbackSquare<Morphism> pullback_of_deflation(const Morphism& p, const Morphism& f) const;
  Morphism pullback_lift(const PullbackSquare<Morphism>& square, const Morphism& x, const Morphism& y) const;
  std::optional<AdmissibleFactorization<Morphism>> admissible_factorization(const Morphism& f) const;

  // Additive structure.
  Morphism zero(const Object& a, const Object& b) const;
  Morphism add(const Morphism& f, const Morphism& g) const;
  Morphism subtract(const Morphism& f, const Morphism& g) const;
  Morphism negate(const Morphism& f) const;
  Morphism scale(const Integer& k, const Morphism& f) const;
  DirectSum direct_sum(const std::vector<Object>& summands) const;
  /// The morphism between direct sums with the given blocks (rows index the
  /// target summands).
  Morphism block(const DirectSum& source, const DirectSum& target,
                 const std::vector<std::vector<Morphism>>& blocks) const;

  /// Throws Unsupported unless both groups are free.
  FreeHom free_hom(const Object& a, const Object& b) const;

  /// Isomorphism to the canonical presentation.
  Morphism to_canonical(const Object& a) const;
  bool is_injective(const Morphism& f) const;
  bool is_zero(const Morphism& f) const { return f.matrix().is_zero(); }
};

static_assert(WeaklyExactCategory<FgabCategory>);
static_assert(HasPullbacks<FgabCategory>);
static_assert(HasAdmissibleFactorization<FgabCategory>);

}  // namespace wex::fgab
