#include "wex/fgab/random.hpp"

#include <algorithm>

namespace wex::fgab {

FgabSampler::FgabSampler(std::uint64_t seed, SamplerOptions options) : rng_(seed), options_(options) {}

long FgabSampler::entry(long bound) { return std::uniform_int_distribution<long>(-bound, bound)(rng_); }

std::size_t FgabSampler::index(std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound)(rng_);
}

IntMatrix FgabSampler::matrix(std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(options_.max_entry);
  }
  return m;
}

FpAbelianGroup FgabSampler::group() {
  // The zero group about one time in eight; at most n relations, so the
  // result is rarely trivial.
  const std::size_t n = options_.max_generators == 0 || index(7) == 0 ? 0 : 1 + index(options_.max_generators - 1);
  const std::size_t k = index(std::min(n, options_.max_relations));
  return FpAbelianGroup(n, matrix(n, k));
}

FpAbelianGroup FgabSampler::free_group(std::size_t max_rank) { return FpAbelianGroup::free(index(max_rank)); }

AbMorphism FgabSampler::morphism(const FpAbelianGroup& a, const FpAbelianGroup& b) {
  // Random map between canonical presentations, transported back.
  const CanonicalForm ca = canonicalize(a.generators(), a.relations());
  const CanonicalForm cb = canonicalize(b.generators(), b.relations());
  const Invariants ia = ca.group.invariants();
  const Invariants ib = cb.group.invariants();
  IntMatrix m(cb.group.generators(), ca.group.generators());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer x = entry(options_.max_entry);
      if (j >= ia.torsion.size()) {
        m(i, j) = x;
      } else if (i < ib.torsion.size()) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), ib.torsion[i].get_mpz_t(), ia.torsion[j].get_mpz_t());
        m(i, j) = x * (ib.torsion[i] / g);
      }
    }
  }
  return AbMorphism(a, b, cb.from_canonical * m * ca.to_canonical);
}

ShortExactSequence<AbMorphism> FgabSampler::short_exact() {
  const FpAbelianGroup b = group();
  const FpAbelianGroup x = group();
  const auto fac = cat_.admissible_factorization(morphism(x, b));
  return {fac->inflation_part, fac->cokernel};
}

ShortExactSequence<AbMorphism> FgabSampler::short_exact_onto(const FpAbelianGroup& c) {
  const FpAbelianGroup x = group();
  const DirectSum s = cat_.direct_sum({c, x});
  const AbMorphism p = cat_.add(s.projections[0], cat_.compose(morphism(x, c), s.projections[1]));
  return {cat_.kernel(p), p};
}

}  // namespace wex::fgab
