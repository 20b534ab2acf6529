#include "wex/fgab/group.hpp"

#include <sstream>
#include <stdexcept>

#include "wex/core/errors.hpp"

namespace wex::fgab {

std::string Invariants::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << 'Z';
    if (free_rank > 1) out << '^' << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) out << " ⊕ ";
    out << "Z/" << d.get_str();
    first = false;
  }
  return out.str();
}

struct FpAbelianGroup::Data {
  std::size_t generators = 0;
  IntMatrix relations;
  Lattice lattice{0};
  bool canonical = false;
};

FpAbelianGroup::FpAbelianGroup() : FpAbelianGroup(0, IntMatrix(0, 0)) {}

FpAbelianGroup::FpAbelianGroup(std::size_t generators, const IntMatrix& relations) {
  if (relations.rows() != generators) {
    throw std::invalid_argument("FpAbelianGroup: relation matrix must have one row per generator");
  }
  auto d = std::make_shared<Data>();
  d->generators = generators;
  d->relations = relations;
  d->lattice = Lattice(relations);
  // Canonical: diag(d_1..d_t) on the first t generators, 1 < d_1 | d_2 | ..., rest free.
  const IntMatrix& b = d->lattice.basis();
  bool canonical = true;
  for (std::size_t j = 0; j < b.cols() && canonical; ++j) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      const bool diag = i == j;
      if (diag && b(i, j) <= 1) canonical = false;
      if (!diag && sgn(b(i, j)) != 0) canonical = false;
    }
    if (j > 0 && canonical && !mpz_divisible_p(b(j, j).get_mpz_t(), b(j - 1, j - 1).get_mpz_t())) {
      canonical = false;
    }
  }
  d->canonical = canonical;
  data_ = std::move(d);
}

FpAbelianGroup FpAbelianGroup::free(std::size_t rank) { return FpAbelianGroup(rank, IntMatrix(rank, 0)); }

FpAbelianGroup FpAbelianGroup::cyclic(const Integer& order) {
  if (order == 0) return free(1);
  IntMatrix r(1, 1);
  r(0, 0) = order;
  return FpAbelianGroup(1, r);
}

FpAbelianGroup FpAbelianGroup::canonical(const std::vector<Integer>& torsion, std::size_t free_rank) {
  const std::size_t n = torsion.size() + free_rank;
  return FpAbelianGroup(n, IntMatrix::diagonal(n, torsion.size(), torsion));
}

std::size_t FpAbelianGroup::generators() const { return data_->generators; }
const IntMatrix& FpAbelianGroup::relations() const { return data_->relations; }
const Lattice& FpAbelianGroup::relation_lattice() const { return data_->lattice; }
bool FpAbelianGroup::is_canonical() const { return data_->canonical; }

Invariants FpAbelianGroup::invariants() const {
  Invariants inv;
  const SmithForm sf = snf(relations());
  std::size_t nonzero = 0;
  for (const auto& d : sf.diagonal()) {
    if (sgn(d) == 0) continue;
    ++nonzero;
    if (d != 1) inv.torsion.push_back(d);
  }
  inv.free_rank = generators() - nonzero;
  return inv;
}

std::string FpAbelianGroup::to_string() const {
  if (is_canonical()) return invariants().to_string();
  std::ostringstream out;
  out << "<" << generators() << " | " << relations().to_string() << "> = " << invariants().to_string();
  return out.str();
}

bool operator==(const FpAbelianGroup& a, const FpAbelianGroup& b) {
  if (a.data_ == b.data_) return true;
  return a.generators() == b.generators() && a.relation_lattice() == b.relation_lattice();
}

bool well_defined(const FpAbelianGroup& source, const FpAbelianGroup& target, const IntMatrix& matrix) {
  if (matrix.rows() != target.generators() || matrix.cols() != source.generators()) return false;
  return target.relation_lattice().contains(matrix * source.relation_lattice().basis());
}

AbMorphism::AbMorphism(FpAbelianGroup source, FpAbelianGroup target, const IntMatrix& matrix) {
  if (matrix.rows() != target.generators() || matrix.cols() != source.generators()) {
    throw ContractViolation("AbMorphism: matrix is " + std::to_string(matrix.rows()) + "x" +
                            std::to_string(matrix.cols()) + ", expected " +
                            std::to_string(target.generators()) + "x" +
                            std::to_string(source.generators()));
  }
  if (!well_defined(source, target, matrix)) {
    throw ContractViolation("AbMorphism: matrix " + matrix.to_string() +
                            " does not respect the relations of the source");
  }
  matrix_ = target.reduce(matrix);
  source_ = std::move(source);
  target_ = std::move(target);
}

AbMorphism AbMorphism::trusted(FpAbelianGroup source, FpAbelianGroup target, const IntMatrix& matrix) {
  AbMorphism f;
  f.matrix_ = target.reduce(matrix);
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  return f;
}

std::string AbMorphism::to_string() const {
  return source_.to_string() + " -> " + target_.to_string() + ", matrix " + matrix_.to_string();
}

CanonicalForm canonicalize(std::size_t generators, const IntMatrix& relations) {
  const SmithForm sf = snf(relations);
  const std::vector<Integer> diag = sf.diagonal();
  std::vector<std::size_t> kept;
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < generators; ++i) {
    const bool unit = i < diag.size() && diag[i] == 1;
    if (unit) continue;
    kept.push_back(i);
    if (i < diag.size() && sgn(diag[i]) != 0) torsion.push_back(diag[i]);
  }
  // SNF orders the nonzero factors first, so torsion generators precede free ones.
  CanonicalForm out{FpAbelianGroup::canonical(torsion, kept.size() - torsion.size()),
                    sf.S.select_rows(kept), sf.S_inv.select_columns(kept)};
  return out;
}

}  // namespace wex::fgab
