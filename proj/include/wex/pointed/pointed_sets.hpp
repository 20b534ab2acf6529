#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wex/core/category.hpp"
#include "wex/core/exactness.hpp"

namespace wex::pointed {

/// {0, 1, ..., size - 1} with basepoint 0.
struct PointedSet {
  std::size_t size = 1;

  friend bool operator==(const PointedSet&, const PointedSet&) = default;
};

/// Basepoint-preserving map; table[x] is the image of x and table[0] = 0.
struct PointedMap {
  PointedSet source;
  PointedSet target;
  std::vector<std::size_t> table;

  friend bool operator==(const PointedMap&, const PointedMap&) = default;
};

/// Validates and builds a map from its table.
PointedMap make_map(std::size_t source_size, std::size_t target_size, std::vector<std::size_t> table);

enum class DeflationClass {
  /// Surjective and injective off the fibre over the basepoint.
  Collapse,
  /// Every surjection.
  AllSurjections,
};

class PointedSetsCategory {
 public:
  using Object = PointedSet;
  using Morphism = PointedMap;

  explicit PointedSetsCategory(DeflationClass deflations = DeflationClass::Collapse) : deflations_(deflations) {}

  DeflationClass deflation_class() const { return deflations_; }

  Object zero_object() const { return PointedSet{1}; }
  bool same_object(const Object& a, const Object& b) const { return a == b; }
  Object source(const Morphism& f) const { return f.source; }
  Object target(const Morphism& f) const { return f.target; }
  Morphism identity(const Object& a) const;
  Morphism compose(const Morphism& g, const Morphism& f) const;
  bool equal(const Morphism& f, const Morphism& g) const { return f == g; }
  Morphism to_zero(const Object& a) const;
  Morphism from_zero(const Object& a) const;
  bool is_deflation(const Morphism& f) const;
  /// Inclusion of the fibre over the basepoint, in increasing order.
  Morphism kernel(const Morphism& f) const;
  /// Collapse of the image to the basepoint; the other points keep their order.
  Morphism cokernel(const Morphism& f) const;
  Morphism kernel_lift(const Morphism& p, const Morphism& k, const Morphism& g) const;
  Morphism cokernel_colift(const Morphism& i, const Morphism& c, const Morphism& g) const;
  std::string describe(const Object& a) const;
  std::string describe(const Morphism& f) const;

  /// Set-theoretic pullback, pairs in lexicographic order.
  PullbackSquare<Morphism> pullback_of_deflation(const Morphism& p, const Morphism& f) const;
  Morphism pullback_lift(const PullbackSquare<Morphism>& square, const Morphism& x, const Morphism& y) const;
  /// Exists iff f is injective off the fibre over the basepoint.
  std::optional<AdmissibleFactorization<Morphism>> admissible_factorization(const Morphism& f) const;

  /// Sizes 1..max_size.
  std::vector<Object> enumerate_objects(std::size_t max_size) const;
  /// All |B|^(|A|-1) maps, tables in lexicographic order.
  std::vector<Morphism> enumerate_morphisms(const Object& a, const Object& b) const;

  bool is_surjective(const Morphism& f) const;
  bool is_injective(const Morphism& f) const;
  bool is_injective_off_kernel(const Morphism& f) const;

 private:
  DeflationClass deflations_;
};

static_assert(WeaklyExactCategory<PointedSetsCategory>);
static_assert(HasPullbacks<PointedSetsCategory>);
static_assert(Enumerable<PointedSetsCategory>);
static_assert(HasAdmissibleFactorization<PointedSetsCategory>);

}  // namespace wex::pointed
