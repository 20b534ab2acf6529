#include "wex/fgab/category.hpp"

namespace wex::fgab {

namespace {

void require_composable(const AbMorphism& g, const AbMorphism& f, const char* what) {
  if (!(f.target() == g.source())) {
    throw ContractViolation(std::string(what) + ": target of " + f.to_string() + " is not the source of " +
                            g.to_string());
  }
}

void require_parallel(const AbMorphism& f, const AbMorphism& g, const char* what) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw ContractViolation(std::string(what) + ": morphisms are not parallel");
  }
}

// Flips generators so the first nonzero entry of each column is positive.
IntMatrix orient_columns(const IntMatrix& m) {
  IntMatrix out = m;
  for (std::size_t c = 0; c < out.cols(); ++c) {
    for (std::size_t r = 0; r < out.rows(); ++r) {
      const int s = sgn(out(r, c));
      if (s == 0) continue;
      if (s < 0) out.negate_column(c);
      break;
    }
  }
  return out;
}

}  // namespace

IntMatrix FreeHom::encode(const AbMorphism& f) const {
  if (!(f.source() == source) || !(f.target() == target)) {
    throw ContractViolation("FreeHom::encode: morphism not in this hom group");
  }
  const IntMatrix& m = f.matrix();
  return IntMatrix(m.rows() * m.cols(), 1, m.row_major());
}

AbMorphism FreeHom::decode(const IntMatrix& column) const {
  const std::size_t rows = target.generators();
  const std::size_t cols = source.generators();
  if (column.cols() != 1 || column.rows() != rows * cols) {
    throw ContractViolation("FreeHom::decode: vector has the wrong length");
  }
  return AbMorphism(source, target, IntMatrix(rows, cols, column.row_major()));
}

AbMorphism FgabCategory::identity(const Object& a) const {
  return AbMorphism::trusted(a, a, IntMatrix::identity(a.generators()));
}

AbMorphism FgabCategory::compose(const Morphism& g, const Morphism& f) const {
  require_composable(g, f, "compose");
  return AbMorphism::trusted(f.source(), g.target(), g.matrix() * f.matrix());
}

AbMorphism FgabCategory::to_zero(const Object& a) const {
  return AbMorphism::trusted(a, zero_object(), IntMatrix(0, a.generators()));
}

AbMorphism FgabCategory::from_zero(const Object& a) const {
  return AbMorphism::trusted(zero_object(), a, IntMatrix(a.generators(), 0));
}

bool FgabCategory::is_deflation(const Morphism& f) const {
  const std::size_t m = f.target().generators();
  const Lattice image(hcat(f.matrix(), f.target().relation_lattice().basis()));
  return image.rank() == m && image.basis() == IntMatrix::identity(m);
}

bool FgabCategory::is_injective(const Morphism& f) const {
  return is_zero_object(*this, kernel(f).source());
}

AbMorphism FgabCategory::kernel(const Morphism& f) const {
  const FpAbelianGroup& a = f.source();
  if (is_zero(f)) return identity(a);
  const std::size_t n = a.generators();
  // Preimage of the target's relation lattice, then its relations inside A.
  const IntMatrix pre = nullspace(hcat(f.matrix(), f.target().relation_lattice().basis()));
  const IntMatrix gens = pre.block(0, 0, n, pre.cols());
  const std::size_t t = gens.cols();
  const IntMatrix rel_full = nullspace(hcat(gens, a.relation_lattice().basis()));
  const IntMatrix rel = rel_full.block(0, 0, t, rel_full.cols());
  const CanonicalForm cf = canonicalize(t, rel);
  const IntMatrix inclusion = orient_columns(a.reduce(gens * cf.from_canonical));
  return AbMorphism::trusted(cf.group, a, inclusion);
}

AbMorphism FgabCategory::cokernel(const Morphism& f) const {
  const FpAbelianGroup& b = f.target();
  if (is_zero(f)) return identity(b);
  const std::size_t m = b.generators();
  const CanonicalForm cf = canonicalize(m, hcat(b.relation_lattice().basis(), f.matrix()));
  return AbMorphism::trusted(b, cf.group, cf.to_canonical);
}

AbMorphism FgabCategory::kernel_lift(const Morphism& p, const Morphism& k, const Morphism& g) const {
  require_composable(p, k, "kernel_lift");
  require_composable(p, g, "kernel_lift");
  if (!is_zero(compose(p, g))) {
    throw ContractViolation("kernel_lift: p∘g is not zero for g = " + g.to_string());
  }
  const FpAbelianGroup& b = k.target();
  const std::size_t nk = k.source().generators();
  const auto sol = solve(hcat(k.matrix(), b.relation_lattice().basis()), g.matrix());
  if (!sol) throw ContractViolation("kernel_lift: g does not factor through " + k.to_string());
  const IntMatrix u = sol->block(0, 0, nk, sol->cols());
  if (!well_defined(g.source(), k.source(), u)) {
    throw ContractViolation("kernel_lift: factorization through " + k.to_string() + " is not well defined");
  }
  return AbMorphism::trusted(g.source(), k.source(), u);
}

AbMorphism FgabCategory::cokernel_colift(const Morphism& i, const Morphism& c, const Morphism& g) const {
  require_composable(c, i, "cokernel_colift");
  require_composable(g, i, "cokernel_colift");
  if (!is_zero(compose(g, i))) {
    throw ContractViolation("cokernel_colift: g∘i is not zero for g = " + g.to_string());
  }
  const FpAbelianGroup& q = c.target();
  const std::size_t nb = c.source().generators();
  const std::size_t nq = q.generators();
  // Preimages of the generators of Q.
  const auto sol = solve(hcat(c.matrix(), q.relation_lattice().basis()), IntMatrix::identity(nq));
  if (!sol) throw ContractViolation("cokernel_colift: " + c.to_string() + " is not surjective");
  const IntMatrix v = g.matrix() * sol->block(0, 0, nb, nq);
  if (!well_defined(q, g.target(), v)) {
    throw ContractViolation("cokernel_colift: g does not factor through " + c.to_string());
  }
  const AbMorphism out = AbMorphism::trusted(q, g.target(), v);
  if (!(compose(out, c) == g)) {
    throw ContractViolation("cokernel_colift: g does not factor through " + c.to_string());
  }
  return out;
}

PullbackSquare<AbMorphism> FgabCategory::pullback_of_deflation(const Morphism& p, const Morphism& f) const {
  if (!(p.target() == f.target())) {
    throw ContractViolation("pullback_of_deflation: p and f have different targets");
  }
  if (!is_deflation(p)) throw ContractViolation("pullback_of_deflation: " + p.to_string() + " is not a deflation");
  const DirectSum s = direct_sum({p.source(), f.source()});
  const AbMorphism h = subtract(compose(p, s.projections[0]), compose(f, s.projections[1]));
  const AbMorphism k = kernel(h);
  return {compose(s.projections[0], k), compose(s.projections[1], k)};
}

AbMorphism FgabCategory::pullback_lift(const PullbackSquare<Morphism>& square, const Morphism& x,
                                       const Morphism& y) const {
  const FpAbelianGroup& p = square.first.source();
  if (!(square.second.source() == p)) throw ContractViolation("pullback_lift: malformed square");
  if (!(x.source() == y.source()) || !(x.target() == square.first.target()) ||
      !(y.target() == square.second.target())) {
    throw ContractViolation("pullback_lift: x, y do not form a cone over the square");
  }
  const DirectSum s = direct_sum({square.first.target(), square.second.target()});
  const IntMatrix legs = vcat(square.first.matrix(), square.second.matrix());
  const auto sol = solve(hcat(legs, s.object.relation_lattice().basis()), vcat(x.matrix(), y.matrix()));
  if (!sol) throw ContractViolation("pullback_lift: (x, y) does not factor through the pullback");
  const IntMatrix u = sol->block(0, 0, p.generators(), sol->cols());
  if (!well_defined(x.source(), p, u)) {
    throw ContractViolation("pullback_lift: factorization is not well defined");
  }
  return AbMorphism::trusted(x.source(), p, u);
}

std::optional<AdmissibleFactorization<AbMorphism>> FgabCategory::admissible_factorization(
    const Morphism& f) const {
  const AbMorphism k = kernel(f);
  const AbMorphism e = cokernel(k);
  const AbMorphism m = cokernel_colift(k, e, f);
  const AbMorphism c = cokernel(m);
  return AdmissibleFactorization<AbMorphism>{f, e, m, k, c};
}

AbMorphism FgabCategory::zero(const Object& a, const Object& b) const {
  return AbMorphism::trusted(a, b, IntMatrix(b.generators(), a.generators()));
}

AbMorphism FgabCategory::add(const Morphism& f, const Morphism& g) const {
  require_parallel(f, g, "add");
  return AbMorphism::trusted(f.source(), f.target(), f.matrix() + g.matrix());
}

AbMorphism FgabCategory::subtract(const Morphism& f, const Morphism& g) const {
  require_parallel(f, g, "subtract");
  return AbMorphism::trusted(f.source(), f.target(), f.matrix() - g.matrix());
}

AbMorphism FgabCategory::negate(const Morphism& f) const {
  return AbMorphism::trusted(f.source(), f.target(), -f.matrix());
}

AbMorphism FgabCategory::scale(const Integer& k, const Morphism& f) const {
  return AbMorphism::trusted(f.source(), f.target(), k * f.matrix());
}

DirectSum FgabCategory::direct_sum(const std::vector<Object>& summands) const {
  std::size_t total = 0;
  for (const auto& a : summands) total += a.generators();
  IntMatrix rel(0, 0);
  for (const auto& a : summands) rel = fgab::direct_sum(rel, a.relations());
  DirectSum out{FpAbelianGroup(total, rel), {}, {}};
  std::size_t offset = 0;
  for (const auto& a : summands) {
    const std::size_t n = a.generators();
    IntMatrix inc(total, n);
    IntMatrix proj(n, total);
    for (std::size_t j = 0; j < n; ++j) {
      inc(offset + j, j) = 1;
      proj(j, offset + j) = 1;
    }
    out.inclusions.push_back(AbMorphism::trusted(a, out.object, inc));
    out.projections.push_back(AbMorphism::trusted(out.object, a, proj));
    offset += n;
  }
  return out;
}

AbMorphism FgabCategory::block(const DirectSum& source, const DirectSum& target,
                               const std::vector<std::vector<Morphism>>& blocks) const {
  if (blocks.size() != target.projections.size()) throw ContractViolation("block: wrong number of block rows");
  AbMorphism acc = zero(source.object, target.object);
  for (std::size_t r = 0; r < blocks.size(); ++r) {
    if (blocks[r].size() != source.inclusions.size()) {
      throw ContractViolation("block: wrong number of block columns");
    }
    for (std::size_t c = 0; c < blocks[r].size(); ++c) {
      acc = add(acc, compose_all(*this, {target.inclusions[r], blocks[r][c], source.projections[c]}));
    }
  }
  return acc;
}

FreeHom FgabCategory::free_hom(const Object& a, const Object& b) const {
  if (!a.is_free() || !b.is_free()) {
    throw Unsupported("hom groups are implemented for free groups only, got " + a.to_string() + " and " +
                      b.to_string());
  }
  return FreeHom{a, b, FpAbelianGroup::free(a.generators() * b.generators())};
}

AbMorphism FgabCategory::to_canonical(const Object& a) const {
  const CanonicalForm cf = canonicalize(a.generators(), a.relations());
  return AbMorphism::trusted(a, cf.group, cf.to_canonical);
}

}  // namespace wex::fgab
