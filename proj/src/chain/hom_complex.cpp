#include "wex/chain/hom_complex.hpp"

#include <string>

namespace wex::chain {

using fgab::AbMorphism;
using fgab::FgabCategory;
using fgab::FpAbelianGroup;
using fgab::IntMatrix;
using fgab::Integer;

namespace {

const FgabCategory cat;

int parity_sign(int degree) { return degree % 2 == 0 ? 1 : -1; }

bool all_free(const FgabComplex& x) {
  for (const auto& a : x.objects)
    if (!a.is_free()) return false;
  return true;
}

}  // namespace

FgabComplex free_complex(int lo, const std::vector<std::size_t>& ranks, const std::vector<IntMatrix>& d) {
  std::vector<FpAbelianGroup> objects;
  for (std::size_t r : ranks) objects.push_back(FpAbelianGroup::free(r));
  return fgab_complex(lo, objects, d);
}

FgabComplex fgab_complex(int lo, const std::vector<FpAbelianGroup>& objects, const std::vector<IntMatrix>& d) {
  if (d.size() + 1 != objects.size()) {
    throw ContractViolation("fgab_complex: " + std::to_string(objects.size()) + " objects need " +
                            std::to_string(objects.size() - 1) + " differentials");
  }
  std::vector<AbMorphism> maps;
  for (std::size_t k = 0; k < d.size(); ++k) maps.emplace_back(objects[k], objects[k + 1], d[k]);
  return make_complex(cat, lo, objects, maps);
}

std::vector<fgab::Invariants> cohomology_invariants(const FgabComplex& x) {
  std::vector<fgab::Invariants> out;
  for (int i = x.lo; i <= x.hi(); ++i) out.push_back(cohomology(cat, x, i).invariants());
  return out;
}

long euler_characteristic(const FgabComplex& x) {
  long chi = 0;
  for (int i = x.lo; i <= x.hi(); ++i) {
    chi += parity_sign(i) * static_cast<long>(object_at(cat, x, i).invariants().free_rank);
  }
  return chi;
}

long cohomology_euler_characteristic(const FgabComplex& x) {
  long chi = 0;
  const auto h = cohomology_invariants(x);
  for (int i = x.lo; i <= x.hi(); ++i) {
    chi += parity_sign(i) * static_cast<long>(h[static_cast<std::size_t>(i - x.lo)].free_rank);
  }
  return chi;
}

// ---------------------------------------------------------------------------

AbMorphism graded_component(const FgabComplex& a, const FgabComplex& b, const GradedMorphism& f, int i) {
  const int k = i - f.lo;
  if (k >= 0 && k < static_cast<int>(f.components.size())) return f.components[static_cast<std::size_t>(k)];
  return cat.zero(object_at(cat, a, i), object_at(cat, b, i + f.degree));
}

GradedMorphism epsilon(const GradedMorphism& f) { return parity_sign(f.degree) == 1 ? f : graded_negate(f); }

GradedMorphism graded_negate(const GradedMorphism& f) {
  GradedMorphism g{f.degree, f.lo, {}};
  for (const auto& c : f.components) g.components.push_back(cat.negate(c));
  return g;
}

GradedMorphism graded_add(const GradedMorphism& f, const GradedMorphism& g) {
  if (f.degree != g.degree) {
    throw ContractViolation("graded_add: degrees " + std::to_string(f.degree) + " and " + std::to_string(g.degree));
  }
  if (f.lo != g.lo || f.components.size() != g.components.size()) {
    throw ContractViolation("graded_add: different source windows");
  }
  GradedMorphism s{f.degree, f.lo, {}};
  for (std::size_t k = 0; k < f.components.size(); ++k) s.components.push_back(cat.add(f.components[k], g.components[k]));
  return s;
}

GradedMorphism graded_compose(const FgabComplex& a, const FgabComplex& b, const FgabComplex& c,
                              const GradedMorphism& g, const GradedMorphism& f) {
  GradedMorphism h{f.degree + g.degree, a.lo, {}};
  for (int i = a.lo; i <= a.hi(); ++i) {
    h.components.push_back(checked_compose(cat, graded_component(b, c, g, i + f.degree), graded_component(a, b, f, i)));
  }
  return h;
}

GradedMorphism differential_of(const FgabComplex& a) {
  GradedMorphism d{1, a.lo, {}};
  for (int i = a.lo; i <= a.hi(); ++i) d.components.push_back(differential_at(cat, a, i).morphism);
  return d;
}

GradedMorphism graded_identity(const FgabComplex& a) {
  GradedMorphism f{0, a.lo, {}};
  for (const auto& x : a.objects) f.components.push_back(cat.identity(x));
  return f;
}

GradedMorphism graded_zero(const FgabComplex& a, const FgabComplex& b, int degree) {
  GradedMorphism f{degree, a.lo, {}};
  for (int i = a.lo; i <= a.hi(); ++i) f.components.push_back(cat.zero(object_at(cat, a, i), object_at(cat, b, i + degree)));
  return f;
}

bool graded_equal(const GradedMorphism& f, const GradedMorphism& g) {
  return f.degree == g.degree && f.lo == g.lo && f.components == g.components;
}

FgabChainMap to_chain_map(const FgabComplex& a, const FgabComplex& b, const GradedMorphism& f) {
  if (f.degree != 0) throw ContractViolation("to_chain_map: degree " + std::to_string(f.degree));
  FgabChainMap m{a.lo, {}};
  for (int i = a.lo; i <= a.hi(); ++i) m.components.push_back(graded_component(a, b, f, i));
  return m;
}

// ---------------------------------------------------------------------------

HomComplex::HomComplex(FgabComplex a, FgabComplex b) : a_(std::move(a)), b_(std::move(b)) {
  if (!all_free(a_) || !all_free(b_)) throw Unsupported("hom_complex: components must be free");
  const int lo = b_.lo - a_.hi();
  const int hi = b_.hi() - a_.lo;
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> d;
  for (int k = lo; k <= hi; ++k) {
    ranks.push_back(rank(k));
    if (k < hi) d.push_back(d_matrix(k));
  }
  hom_ = free_complex(lo, ranks, d);
}

std::vector<HomComplex::Block> HomComplex::blocks(int k) const {
  std::vector<Block> out;
  std::size_t offset = 0;
  for (int i = a_.lo; i <= a_.hi(); ++i) {
    if (!b_.in_window(i + k)) continue;
    const std::size_t rows = object_at(cat, b_, i + k).generators();
    const std::size_t cols = object_at(cat, a_, i).generators();
    out.push_back({i, rows, cols, offset});
    offset += rows * cols;
  }
  return out;
}

std::size_t HomComplex::rank(int k) const {
  std::size_t n = 0;
  for (const auto& blk : blocks(k)) n += blk.rows * blk.cols;
  return n;
}

IntMatrix HomComplex::encode(const GradedMorphism& f) const {
  IntMatrix v(rank(f.degree), 1);
  for (const auto& blk : blocks(f.degree)) {
    const IntMatrix m = graded_component(a_, b_, f, blk.i).matrix();
    for (std::size_t r = 0; r < blk.rows; ++r)
      for (std::size_t c = 0; c < blk.cols; ++c) v(blk.offset + r * blk.cols + c, 0) = m(r, c);
  }
  return v;
}

GradedMorphism HomComplex::decode(int k, const IntMatrix& column) const {
  if (column.rows() != rank(k) || column.cols() != 1) throw ContractViolation("HomComplex::decode: wrong length");
  GradedMorphism f = graded_zero(a_, b_, k);
  for (const auto& blk : blocks(k)) {
    IntMatrix m(blk.rows, blk.cols);
    for (std::size_t r = 0; r < blk.rows; ++r)
      for (std::size_t c = 0; c < blk.cols; ++c) m(r, c) = column(blk.offset + r * blk.cols + c, 0);
    f.components[static_cast<std::size_t>(blk.i - a_.lo)] =
        AbMorphism::trusted(object_at(cat, a_, blk.i), object_at(cat, b_, blk.i + k), m);
  }
  return f;
}

GradedMorphism HomComplex::d(const GradedMorphism& f) const {
  const int k = f.degree;
  GradedMorphism g{k + 1, a_.lo, {}};
  for (int i = a_.lo; i <= a_.hi(); ++i) {
    const AbMorphism fd = cat.compose(graded_component(a_, b_, f, i + 1), differential_at(cat, a_, i).morphism);
    const AbMorphism df = cat.compose(differential_at(cat, b_, i + k).morphism, graded_component(a_, b_, f, i));
    g.components.push_back(parity_sign(k) == 1 ? cat.subtract(fd, df) : cat.add(fd, df));
  }
  return g;
}

IntMatrix HomComplex::d_matrix(int k) const {
  const std::size_t n = rank(k);
  IntMatrix m(rank(k + 1), n);
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix e(n, 1);
    e(j, 0) = 1;
    const IntMatrix col = encode(d(decode(k, e)));
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = col(r, 0);
  }
  return m;
}

bool HomComplex::is_cycle(const GradedMorphism& f) const {
  for (const auto& c : d(f).components)
    if (!cat.is_zero(c)) return false;
  return true;
}

std::optional<GradedMorphism> HomComplex::primitive(const GradedMorphism& f) const {
  const int k = f.degree;
  const IntMatrix target = encode(f);
  const auto x = fgab::solve(d_matrix(k - 1), target);
  if (!x) return std::nullopt;
  return decode(k - 1, *x);
}

HomComplex hom_complex(const FgabComplex& a, const FgabComplex& b) { return HomComplex(a, b); }

bool homotopy_equal(const HomComplex& h, const GradedMorphism& f, const GradedMorphism& g) {
  if (f.degree != 0 || g.degree != 0 || !h.is_cycle(f) || !h.is_cycle(g)) {
    throw ContractViolation("homotopy_equal: arguments must be degree-0 cycles");
  }
  return h.primitive(graded_add(f, graded_negate(g))).has_value();
}

std::vector<AbMorphism> homotopy_class_map(const HomComplex& h, const GradedMorphism& f) {
  if (f.degree != 0 || !h.is_cycle(f)) throw ContractViolation("homotopy_class_map: not a degree-0 cycle");
  const auto m = to_chain_map(h.source(), h.target(), f);
  const auto [lo, hi] = joint_window(h.source(), h.target());
  std::vector<AbMorphism> out;
  for (int i = lo; i <= hi; ++i) out.push_back(induced_map(cat, h.source(), h.target(), m, i));
  return out;
}

bool is_quasi_isomorphism(const FgabComplex& a, const FgabComplex& b, const GradedMorphism& f) {
  return chain::is_quasi_isomorphism(cat, a, b, to_chain_map(a, b, f));
}

FgabChainMap post_composition(const HomComplex& xa, const HomComplex& xb, const GradedMorphism& f) {
  if (f.degree != 0) throw ContractViolation("post_composition: degree " + std::to_string(f.degree));
  FgabChainMap m{xa.lo(), {}};
  for (int k = xa.lo(); k <= xa.hi(); ++k) {
    const std::size_t n = xa.rank(k);
    IntMatrix mat(xb.rank(k), n);
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix e(n, 1);
      e(j, 0) = 1;
      const GradedMorphism g = xa.decode(k, e);
      const IntMatrix col = xb.encode(graded_compose(xa.source(), xa.target(), xb.target(), f, g));
      for (std::size_t r = 0; r < mat.rows(); ++r) mat(r, j) = col(r, 0);
    }
    m.components.push_back(AbMorphism::trusted(object_at(cat, xa.complex(), k), object_at(cat, xb.complex(), k), mat));
  }
  return m;
}

WeakQuasiIsoReport is_weakly_quasi_isomorphism(const FgabComplex& a, const FgabComplex& b, const GradedMorphism& f,
                                               const std::vector<FgabComplex>& test_objects) {
  if (test_objects.empty()) throw ContractViolation("is_weakly_quasi_isomorphism: empty test set");
  WeakQuasiIsoReport r;
  for (std::size_t n = 0; n < test_objects.size(); ++n) {
    const HomComplex xa(test_objects[n], a);
    const HomComplex xb(test_objects[n], b);
    ++r.samples;
    const auto fail = quasi_isomorphism_failure(cat, xa.complex(), xb.complex(), post_composition(xa, xb, f));
    if (fail) {
      r.holds = false;
      r.failing_sample = n;
      r.failing_degree = *fail;
      break;
    }
  }
  return r;
}

}  // namespace wex::chain
