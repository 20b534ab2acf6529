#include "wex/pointed/pointed_sets.hpp"

#include <sstream>

namespace wex::pointed {

namespace {

void require_composable(const PointedMap& g, const PointedMap& f, const char* what) {
  if (f.target != g.source) throw ContractViolation(std::string(what) + ": maps are not composable");
}

bool is_zero_map(const PointedMap& f) {
  for (std::size_t y : f.table)
    if (y != 0) return false;
  return true;
}

}  // namespace

PointedMap make_map(std::size_t source_size, std::size_t target_size, std::vector<std::size_t> table) {
  if (source_size == 0 || target_size == 0) throw ContractViolation("pointed set of size 0");
  if (table.size() != source_size) {
    throw ContractViolation("map table has " + std::to_string(table.size()) + " entries, expected " +
                            std::to_string(source_size));
  }
  if (table[0] != 0) throw ContractViolation("map does not preserve the basepoint");
  for (std::size_t y : table) {
    if (y >= target_size) throw ContractViolation("map value " + std::to_string(y) + " out of range");
  }
  return PointedMap{PointedSet{source_size}, PointedSet{target_size}, std::move(table)};
}

PointedMap PointedSetsCategory::identity(const Object& a) const {
  std::vector<std::size_t> t(a.size);
  for (std::size_t x = 0; x < a.size; ++x) t[x] = x;
  return PointedMap{a, a, std::move(t)};
}

PointedMap PointedSetsCategory::compose(const Morphism& g, const Morphism& f) const {
  require_composable(g, f, "compose");
  std::vector<std::size_t> t(f.table.size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = g.table[f.table[x]];
  return PointedMap{f.source, g.target, std::move(t)};
}

PointedMap PointedSetsCategory::to_zero(const Object& a) const {
  return PointedMap{a, zero_object(), std::vector<std::size_t>(a.size, 0)};
}

PointedMap PointedSetsCategory::from_zero(const Object& a) const { return PointedMap{zero_object(), a, {0}}; }

bool PointedSetsCategory::is_surjective(const Morphism& f) const {
  std::vector<bool> hit(f.target.size, false);
  for (std::size_t y : f.table) hit[y] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

bool PointedSetsCategory::is_injective(const Morphism& f) const {
  std::vector<bool> hit(f.target.size, false);
  for (std::size_t y : f.table) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool PointedSetsCategory::is_injective_off_kernel(const Morphism& f) const {
  std::vector<bool> hit(f.target.size, false);
  for (std::size_t y : f.table) {
    if (y == 0) continue;
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool PointedSetsCategory::is_deflation(const Morphism& f) const {
  if (!is_surjective(f)) return false;
  return deflations_ == DeflationClass::AllSurjections || is_injective_off_kernel(f);
}

PointedMap PointedSetsCategory::kernel(const Morphism& f) const {
  std::vector<std::size_t> t;
  for (std::size_t x = 0; x < f.source.size; ++x)
    if (f.table[x] == 0) t.push_back(x);
  return PointedMap{PointedSet{t.size()}, f.source, std::move(t)};
}

PointedMap PointedSetsCategory::cokernel(const Morphism& f) const {
  std::vector<bool> in_image(f.target.size, false);
  for (std::size_t y : f.table) in_image[y] = true;
  std::vector<std::size_t> t(f.target.size, 0);
  std::size_t next = 1;
  for (std::size_t y = 0; y < f.target.size; ++y)
    if (!in_image[y]) t[y] = next++;
  return PointedMap{f.target, PointedSet{next}, std::move(t)};
}

PointedMap PointedSetsCategory::kernel_lift(const Morphism& p, const Morphism& k, const Morphism& g) const {
  require_composable(p, k, "kernel_lift");
  require_composable(p, g, "kernel_lift");
  if (!is_zero_map(compose(p, g))) throw ContractViolation("kernel_lift: p∘g is not zero");
  std::vector<std::size_t> t(g.source.size, 0);
  for (std::size_t x = 0; x < g.source.size; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < k.source.size && !found; ++y) {
      if (k.table[y] == g.table[x]) {
        t[x] = y;
        found = true;
      }
    }
    if (!found) throw ContractViolation("kernel_lift: g does not factor through k");
  }
  if (t[0] != 0) throw ContractViolation("kernel_lift: factorization does not preserve the basepoint");
  return PointedMap{g.source, k.source, std::move(t)};
}

PointedMap PointedSetsCategory::cokernel_colift(const Morphism& i, const Morphism& c, const Morphism& g) const {
  require_composable(c, i, "cokernel_colift");
  require_composable(g, i, "cokernel_colift");
  if (!is_zero_map(compose(g, i))) throw ContractViolation("cokernel_colift: g∘i is not zero");
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> t(c.target.size, unset);
  for (std::size_t b = 0; b < c.source.size; ++b) {
    std::size_t& slot = t[c.table[b]];
    if (slot == unset) {
      slot = g.table[b];
    } else if (slot != g.table[b]) {
      throw ContractViolation("cokernel_colift: g is not constant on the fibres of c");
    }
  }
  for (std::size_t v : t)
    if (v == unset) throw ContractViolation("cokernel_colift: c is not surjective");
  return PointedMap{c.target, g.target, std::move(t)};
}

std::string PointedSetsCategory::describe(const Object& a) const { return "P" + std::to_string(a.size); }

std::string PointedSetsCategory::describe(const Morphism& f) const {
  std::ostringstream out;
  out << describe(f.source) << " -> " << describe(f.target) << " [";
  for (std::size_t x = 0; x < f.table.size(); ++x) out << (x ? ", " : "") << f.table[x];
  out << "]";
  return out.str();
}

PullbackSquare<PointedMap> PointedSetsCategory::pullback_of_deflation(const Morphism& p, const Morphism& f) const {
  if (p.target != f.target) throw ContractViolation("pullback_of_deflation: p and f have different targets");
  if (!is_deflation(p)) throw ContractViolation("pullback_of_deflation: " + describe(p) + " is not a deflation");
  std::vector<std::size_t> first, second;
  for (std::size_t b = 0; b < p.source.size; ++b)
    for (std::size_t a = 0; a < f.source.size; ++a)
      if (p.table[b] == f.table[a]) {
        first.push_back(b);
        second.push_back(a);
      }
  const PointedSet pb{first.size()};
  return {PointedMap{pb, p.source, std::move(first)}, PointedMap{pb, f.source, std::move(second)}};
}

PointedMap PointedSetsCategory::pullback_lift(const PullbackSquare<Morphism>& square, const Morphism& x,
                                              const Morphism& y) const {
  if (x.source != y.source || x.target != square.first.target || y.target != square.second.target) {
    throw ContractViolation("pullback_lift: x, y do not form a cone over the square");
  }
  std::vector<std::size_t> t(x.source.size);
  for (std::size_t s = 0; s < x.source.size; ++s) {
    bool found = false;
    for (std::size_t e = 0; e < square.first.source.size && !found; ++e) {
      if (square.first.table[e] == x.table[s] && square.second.table[e] == y.table[s]) {
        t[s] = e;
        found = true;
      }
    }
    if (!found) throw ContractViolation("pullback_lift: (x, y) does not factor through the pullback");
  }
  return PointedMap{x.source, square.first.source, std::move(t)};
}

std::optional<AdmissibleFactorization<PointedMap>> PointedSetsCategory::admissible_factorization(
    const Morphism& f) const {
  if (!is_injective_off_kernel(f)) return std::nullopt;
  // image points in increasing order
  std::vector<bool> in_image(f.target.size, false);
  for (std::size_t y : f.table) in_image[y] = true;
  std::vector<std::size_t> inclusion;
  std::vector<std::size_t> index(f.target.size, 0);
  for (std::size_t y = 0; y < f.target.size; ++y) {
    if (!in_image[y]) continue;
    index[y] = inclusion.size();
    inclusion.push_back(y);
  }
  const PointedSet image{inclusion.size()};
  std::vector<std::size_t> corestriction(f.source.size);
  for (std::size_t x = 0; x < f.source.size; ++x) corestriction[x] = index[f.table[x]];
  const PointedMap e{f.source, image, std::move(corestriction)};
  const PointedMap m{image, f.target, std::move(inclusion)};
  return AdmissibleFactorization<PointedMap>{f, e, m, kernel(f), cokernel(m)};
}

std::vector<PointedSet> PointedSetsCategory::enumerate_objects(std::size_t max_size) const {
  std::vector<PointedSet> out;
  for (std::size_t n = 1; n <= max_size; ++n) out.push_back(PointedSet{n});
  return out;
}

std::vector<PointedMap> PointedSetsCategory::enumerate_morphisms(const Object& a, const Object& b) const {
  std::vector<PointedMap> out;
  std::vector<std::size_t> t(a.size, 0);
  if (a.size == 1) return {PointedMap{a, b, t}};
  while (true) {
    out.push_back(PointedMap{a, b, t});
    // odometer, last entry least significant
    std::size_t pos = a.size - 1;
    while (++t[pos] == b.size) {
      t[pos] = 0;
      if (pos == 1) return out;
      --pos;
    }
  }
}

}  // namespace wex::pointed
