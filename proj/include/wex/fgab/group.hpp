#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "wex/fgab/int_matrix.hpp"
#include "wex/fgab/normal_form.hpp"

namespace wex::fgab {

/// Isomorphism type of a finitely generated abelian group:
/// Z^free_rank ⊕ Z/d_1 ⊕ ... with 1 < d_1 | d_2 | ...
struct Invariants {
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;

  bool is_zero() const { return torsion.empty() && free_rank == 0; }
  /// "0", "Z", "Z^2 ⊕ Z/2 ⊕ Z/4".
  std::string to_string() const;
  bool operator==(const Invariants& other) const = default;
};

/// The group Z^n / (column span of the relation matrix).
///
/// A cheap-to-copy handle to immutable data. Two groups are the same object iff
/// they have the same generator count and the same relation lattice.
class FpAbelianGroup {
 public:
  /// The zero group (no generators).
  FpAbelianGroup();
  FpAbelianGroup(std::size_t generators, const IntMatrix& relations);

  static FpAbelianGroup free(std::size_t rank);
  static FpAbelianGroup cyclic(const Integer& order);
  /// Canonical presentation: torsion generators first (diagonal relations),
  /// then free generators.
  static FpAbelianGroup canonical(const std::vector<Integer>& torsion, std::size_t free_rank);

  std::size_t generators() const;
  const IntMatrix& relations() const;
  const Lattice& relation_lattice() const;
  bool is_free() const { return relation_lattice().rank() == 0; }
  bool is_zero_presentation() const { return generators() == 0; }
  /// Presented in the canonical form produced by `canonical()`.
  bool is_canonical() const;
  Invariants invariants() const;

  /// Canonical coset representatives, column by column.
  IntMatrix reduce(const IntMatrix& columns) const { return relation_lattice().reduce(columns); }

  std::string to_string() const;

  friend bool operator==(const FpAbelianGroup& a, const FpAbelianGroup& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Homomorphism given by an integer matrix (target generators x source
/// generators), stored in reduced form so that equality is matrix equality.
class AbMorphism {
 public:
  /// Validates that the matrix respects the relations of the source.
  AbMorphism(FpAbelianGroup source, FpAbelianGroup target, const IntMatrix& matrix);

  /// Skips the well-definedness check; for results of internal constructions.
  static AbMorphism trusted(FpAbelianGroup source, FpAbelianGroup target, const IntMatrix& matrix);

  const FpAbelianGroup& source() const { return source_; }
  const FpAbelianGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  std::string to_string() const;

  friend bool operator==(const AbMorphism& a, const AbMorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
  }

 private:
  AbMorphism() = default;

  FpAbelianGroup source_;
  FpAbelianGroup target_;
  IntMatrix matrix_;
};

/// True iff `matrix * relations(source)` lies in the relation lattice of target.
bool well_defined(const FpAbelianGroup& source, const FpAbelianGroup& target, const IntMatrix& matrix);

/// Canonical presentation of Z^n / span(relations) together with the mutually
/// inverse isomorphisms (as matrices) between the two presentations.
struct CanonicalForm {
  FpAbelianGroup group;
  IntMatrix to_canonical;    // canonical gens x n
  IntMatrix from_canonical;  // n x canonical gens
};

CanonicalForm canonicalize(std::size_t generators, const IntMatrix& relations);

}  // namespace wex::fgab
