#pragma once

#include <optional>
#include <vector>

#include "wex/fgab/int_matrix.hpp"

namespace wex::fgab {

/// Column-style Hermite normal form: H = M * U with U unimodular.
///
/// H is lower echelon. Its first `rank()` columns are nonzero; column j has
/// its pivot at row `pivot_rows[j]`, the pivot is positive, entries above the
/// pivot are zero and entries to the left of the pivot (in the pivot row) lie
/// in [0, pivot). The remaining columns are zero, and the matching columns of
/// U are a basis of the integer kernel of M.
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::vector<std::size_t> pivot_rows;

  std::size_t rank() const { return pivot_rows.size(); }
};

HermiteForm hnf(const IntMatrix& m);

/// Smith normal form: S * M * T = D with S, T unimodular and S_inv = S^-1.
/// The diagonal is non-negative with d1 | d2 | ... and trailing zeros.
struct SmithForm {
  IntMatrix D;
  IntMatrix S;
  IntMatrix S_inv;
  IntMatrix T;

  /// Diagonal entries d_i for i < min(rows, cols).
  std::vector<Integer> diagonal() const;
};

SmithForm snf(const IntMatrix& m);

/// Some integer solution X of A * X = B, or nullopt when none exists.
std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b);

/// Basis (as columns) of {x in Z^n : A x = 0}.
IntMatrix nullspace(const IntMatrix& a);

/// Sublattice of Z^m spanned by a set of column generators, with a canonical
/// coset representative for every vector of Z^m.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_dim);
  Lattice(const IntMatrix& generators);

  std::size_t ambient_dim() const { return dim_; }
  /// Canonical HNF basis (m x rank).
  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Reduces every column of `v` to the canonical representative of its coset.
  IntMatrix reduce(const IntMatrix& v) const;
  /// True iff every column of `v` lies in the lattice.
  bool contains(const IntMatrix& v) const;

  bool operator==(const Lattice& other) const { return dim_ == other.dim_ && basis_ == other.basis_; }

 private:
  std::size_t dim_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace wex::fgab
