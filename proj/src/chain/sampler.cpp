#include "wex/chain/hom_complex.hpp"

#include <algorithm>
#include <functional>

namespace wex::chain {

using fgab::AbMorphism;
using fgab::FgabCategory;
using fgab::FpAbelianGroup;
using fgab::IntMatrix;
using fgab::Integer;

namespace {

const FgabCategory cat;

std::size_t gens(const FgabComplex& x, int i) { return object_at(cat, x, i).generators(); }

IntMatrix d_matrix_at(const FgabComplex& x, int i) { return differential_at(cat, x, i).morphism.matrix(); }

/// Pointwise map given by one matrix per degree over the window of `a`.
FgabChainMap pointwise(const FgabComplex& a, const FgabComplex& b, const std::function<IntMatrix(int)>& m) {
  FgabChainMap f{a.lo, {}};
  for (int i = a.lo; i <= a.hi(); ++i) f.components.emplace_back(object_at(cat, a, i), object_at(cat, b, i), m(i));
  return f;
}

FgabComplex reduce_mod(const FgabComplex& x, const Integer& m) {
  std::vector<FpAbelianGroup> objects;
  std::vector<IntMatrix> d;
  for (int i = x.lo; i <= x.hi(); ++i) {
    const std::size_t n = gens(x, i);
    objects.emplace_back(n, m * IntMatrix::identity(n));
    if (i < x.hi()) d.push_back(d_matrix_at(x, i));
  }
  return fgab_complex(x.lo, objects, d);
}

}  // namespace

ComplexSampler::ComplexSampler(std::uint64_t seed, ComplexOptions options)
    : base_(seed, {options.max_rank, options.max_rank, options.max_entry}), options_(options) {}

IntMatrix ComplexSampler::small_matrix(std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = base_.entry(options_.max_entry);
  return m;
}

FgabComplex ComplexSampler::free_complex(int lo, std::size_t length) {
  std::vector<std::size_t> ranks;
  for (std::size_t k = 0; k < length; ++k) ranks.push_back(base_.index(options_.max_rank));
  std::vector<IntMatrix> d;
  for (std::size_t k = 0; k + 1 < length; ++k) {
    if (k == 0) {
      d.push_back(small_matrix(ranks[1], ranks[0]));
      continue;
    }
    // Rows of d_k in the left null space of d_{k-1}.
    const IntMatrix n = fgab::nullspace(d.back().transpose());
    d.push_back(small_matrix(ranks[k + 1], n.cols()) * n.transpose());
  }
  return chain::free_complex(lo, ranks, d);
}

FgabComplex ComplexSampler::free_complex() {
  const int lo = static_cast<int>(base_.index(2)) - 1;
  return free_complex(lo, 1 + base_.index(options_.max_length - 1));
}

PointwiseSes ComplexSampler::pointwise_ses() {
  const FgabComplex x = free_complex();
  const Integer m = 2 + static_cast<long>(base_.index(2));
  switch (base_.index(2)) {
    case 0: {
      const FgabComplex q = reduce_mod(x, m);
      return {x, x, q, pointwise(x, x, [&](int i) { return m * IntMatrix::identity(gens(x, i)); }),
              pointwise(x, q, [&](int i) { return IntMatrix::identity(gens(x, i)); })};
    }
    case 1: {
      const FgabComplex q = reduce_mod(x, m);
      const FgabComplex q2 = reduce_mod(x, m * m);
      return {q, q2, q, pointwise(q, q2, [&](int i) { return m * IntMatrix::identity(gens(x, i)); }),
              pointwise(q2, q, [&](int i) { return IntMatrix::identity(gens(x, i)); })};
    }
    default: {
      // A' = A (+) A'' with d' = [[d, h], [0, d'']], h = d s - s d''.
      const FgabComplex& a = x;
      const FgabComplex a2 = free_complex(a.lo, a.objects.size());
      std::vector<IntMatrix> s;
      for (int i = a.lo; i <= a.hi() + 1; ++i) s.push_back(small_matrix(gens(a, i), gens(a2, i)));
      auto s_at = [&](int i) { return s[static_cast<std::size_t>(i - a.lo)]; };
      std::vector<std::size_t> ranks;
      std::vector<IntMatrix> d;
      for (int i = a.lo; i <= a.hi(); ++i) {
        ranks.push_back(gens(a, i) + gens(a2, i));
        if (i == a.hi()) break;
        const IntMatrix h = d_matrix_at(a, i) * s_at(i) - s_at(i + 1) * d_matrix_at(a2, i);
        const IntMatrix lower = hcat(IntMatrix(gens(a2, i + 1), gens(a, i)), d_matrix_at(a2, i));
        d.push_back(vcat(hcat(d_matrix_at(a, i), h), lower));
      }
      const FgabComplex a1 = chain::free_complex(a.lo, ranks, d);
      auto u = pointwise(a, a1, [&](int i) {
        return vcat(IntMatrix::identity(gens(a, i)), IntMatrix(gens(a2, i), gens(a, i)));
      });
      auto v = pointwise(a1, a2, [&](int i) {
        return hcat(IntMatrix(gens(a2, i), gens(a, i)), IntMatrix::identity(gens(a2, i)));
      });
      return {a, a1, a2, u, v};
    }
  }
}

QuasiIsoSample ComplexSampler::quasi_isomorphism() {
  const FgabComplex a = free_complex();
  const int kind = static_cast<int>(base_.index(2));
  if (kind == 2) {
    // id + d s + s d on A.
    const HomComplex h(a, a);
    const GradedMorphism s = h.decode(-1, small_matrix(h.rank(-1), 1));
    return {a, a, graded_add(graded_identity(a), h.d(s))};
  }
  // B = A (+) E with E = (Z --±1--> Z) in degrees j, j+1.
  const int j = a.lo - 1 + static_cast<int>(base_.index(static_cast<std::size_t>(a.hi() - a.lo + 1)));
  const long e = base_.index(1) == 0 ? 1 : -1;
  const int lo = std::min(a.lo, j);
  const int hi = std::max(a.hi(), j + 1);
  auto e_rank = [&](int i) -> std::size_t { return i == j || i == j + 1 ? 1 : 0; };
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> d;
  for (int i = lo; i <= hi; ++i) {
    ranks.push_back(gens(a, i) + e_rank(i));
    if (i == hi) break;
    IntMatrix de(e_rank(i + 1), e_rank(i));
    if (i == j) de(0, 0) = e;
    d.push_back(fgab::direct_sum(d_matrix_at(a, i), de));
  }
  const FgabComplex b = chain::free_complex(lo, ranks, d);
  GradedMorphism base{0, 0, {}};
  const FgabComplex& src = kind == 0 ? a : b;
  const FgabComplex& tgt = kind == 0 ? b : a;
  base.lo = src.lo;
  for (int i = src.lo; i <= src.hi(); ++i) {
    const IntMatrix inc = vcat(IntMatrix::identity(gens(a, i)), IntMatrix(e_rank(i), gens(a, i)));
    base.components.emplace_back(object_at(cat, src, i), object_at(cat, tgt, i), kind == 0 ? inc : inc.transpose());
  }
  const HomComplex h(src, tgt);
  const GradedMorphism s = h.decode(-1, small_matrix(h.rank(-1), 1));
  return {src, tgt, graded_add(base, h.d(s))};
}

GradedMorphism ComplexSampler::cycle(const HomComplex& h, int k) {
  const IntMatrix n = fgab::nullspace(h.d_matrix(k));
  return h.decode(k, n * small_matrix(n.cols(), 1));
}

}  // namespace wex::chain
