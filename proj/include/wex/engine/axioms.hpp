#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "wex/core/category.hpp"
#include "wex/core/exactness.hpp"
#include "wex/engine/three_by_three.hpp"

namespace wex::engine {

enum class Status { Pass, Fail, Inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

struct AxiomVerdict {
  std::string axiom;  // "0", "1", "2", "3", "4", "4a", "4b"
  Status status = Status::Inconclusive;
  /// Number of qualifying diagrams that were checked.
  std::size_t checked = 0;
  /// Smallest counterexample found, when status is Fail.
  std::string counterexample;
  std::string note;
};

struct AxiomReport {
  std::vector<AxiomVerdict> axioms;

  bool all_pass() const {
    for (const auto& a : axioms)
      if (a.status != Status::Pass) return false;
    return true;
  }
  bool any_fail() const {
    for (const auto& a : axioms)
      if (a.status == Status::Fail) return true;
    return false;
  }
  const AxiomVerdict* find(const std::string& name) const {
    for (const auto& a : axioms)
      if (a.axiom == name) return &a;
    return nullptr;
  }
};

// ---------------------------------------------------------------------------
// Single-diagram checks. Each returns the failing clause, or nullopt.

/// Axiom 0 for one morphism known to be an isomorphism or to end at zero.
template <WeaklyExactCategory C>
std::optional<std::string> check_axiom0(const C& cat, const MorphismOf<C>& f) {
  if (!cat.is_deflation(f)) return "not a deflation";
  return std::nullopt;
}

/// Axiom 1 for one deflation: a kernel exists, composes to zero, and p is its
/// cokernel.
template <WeaklyExactCategory C>
std::optional<std::string> check_axiom1(const C& cat, const MorphismOf<C>& p) {
  try {
    const auto k = cat.kernel(p);
    if (!composable(cat, p, k) || !is_zero_morphism(cat, cat.compose(p, k))) return "kernel does not compose to zero";
    const CheckReport r = check_short_exact(cat, k, p);
    if (!r) return r.clause;
  } catch (const Error& e) {
    return std::string("kernel: ") + e.what();
  }
  return std::nullopt;
}

template <WeaklyExactCategory C>
std::optional<std::string> check_axiom2(const C& cat, const MorphismOf<C>& f, const MorphismOf<C>& g) {
  if (!cat.is_deflation(cat.compose(g, f))) return "composite of deflations is not a deflation";
  return std::nullopt;
}

/// Axiom 3, given that f and g f are deflations.
template <WeaklyExactCategory C>
std::optional<std::string> check_axiom3(const C& cat, const MorphismOf<C>& g) {
  if (!cat.is_deflation(g)) return "g is not a deflation although g f and f are";
  return std::nullopt;
}

/// Axiom 4 for a grid whose columns and lower two rows are short exact.
template <WeaklyExactCategory C>
std::optional<std::string> check_axiom4(const C& cat, const Grid3x3<MorphismOf<C>>& g) {
  const CheckReport r = check_short_exact(cat, g.a1, g.a2);
  if (!r) return "first row: " + r.clause;
  return std::nullopt;
}

/// Axiom 4a for deflations p: B -> D and f: A -> D.
template <HasPullbacks C>
std::optional<std::string> check_axiom4a(const C& cat, const MorphismOf<C>& p, const MorphismOf<C>& f) {
  try {
    const auto sq = cat.pullback_of_deflation(p, f);
    if (!cat.equal(cat.compose(p, sq.first), cat.compose(f, sq.second))) return "pullback square does not commute";
    if (!cat.is_deflation(sq.second)) return "base change of p along f is not a deflation";
    if (!cat.is_deflation(sq.first)) return "base change of f along p is not a deflation";
  } catch (const Error& e) {
    return std::string("pullback: ") + e.what();
  }
  return std::nullopt;
}

/// Axiom 4b for short exact (phi1, phi2), (phi1p, phi2p) with a common end and
/// f2 with phi2p f2 = phi2.
template <WeaklyExactCategory C>
std::optional<std::string> check_axiom4b(const C& cat, const MorphismOf<C>& phi1, const MorphismOf<C>& phi1p,
                                         const MorphismOf<C>& phi2p, const MorphismOf<C>& f2) {
  try {
    const auto f1 = cat.kernel_lift(phi2p, phi1p, cat.compose(f2, phi1));
    const bool d1 = cat.is_deflation(f1);
    const bool d2 = cat.is_deflation(f2);
    if (d1 && !d2) return "f1 is a deflation but f2 is not";
    if (d2 && !d1) return "f2 is a deflation but f1 is not";
  } catch (const Error& e) {
    return std::string("induced f1: ") + e.what();
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exhaustive verification over an enumerable instance.

struct ExhaustiveOptions {
  std::size_t max_size = 4;
  /// Maximum number of qualifying diagrams per axiom; beyond it the verdict
  /// is INCONCLUSIVE unless a counterexample was already found.
  std::size_t budget = std::numeric_limits<std::size_t>::max();
};

namespace detail {

/// Tracks the smallest counterexample by a size weight.
struct Tally {
  AxiomVerdict verdict;
  std::size_t best_weight = std::numeric_limits<std::size_t>::max();
  std::size_t budget;
  bool exhausted = false;

  Tally(std::string name, std::size_t b) : budget(b) { verdict.axiom = std::move(name); }

  /// Counts one diagram; false when the budget is used up.
  bool count() {
    if (verdict.checked >= budget) {
      exhausted = true;
      return false;
    }
    ++verdict.checked;
    return true;
  }
  void fail(std::size_t weight, const std::function<std::string()>& describe) {
    if (weight < best_weight) {
      best_weight = weight;
      verdict.counterexample = describe();
    }
  }
  AxiomVerdict finish() {
    if (best_weight != std::numeric_limits<std::size_t>::max()) {
      verdict.status = Status::Fail;
    } else if (exhausted) {
      verdict.status = Status::Inconclusive;
      verdict.note = "budget exhausted";
    } else {
      verdict.status = Status::Pass;
    }
    return verdict;
  }
};

}  // namespace detail

template <Enumerable C>
class ExhaustiveVerifier {
 public:
  using O = ObjectOf<C>;
  using M = MorphismOf<C>;

  ExhaustiveVerifier(const C& cat, ExhaustiveOptions options) : cat_(cat), options_(options) {
    objects_ = cat_.enumerate_objects(options_.max_size);
    homs_.resize(objects_.size());
    for (std::size_t a = 0; a < objects_.size(); ++a)
      for (std::size_t b = 0; b < objects_.size(); ++b)
        homs_[a].push_back(cat_.enumerate_morphisms(objects_[a], objects_[b]));
  }

  AxiomReport run() {
    AxiomReport report;
    report.axioms.push_back(axiom0());
    report.axioms.push_back(axiom1());
    report.axioms.push_back(axiom2());
    report.axioms.push_back(axiom3());
    collect_short_exact();
    report.axioms.push_back(axiom4());
    report.axioms.push_back(axiom4a());
    report.axioms.push_back(axiom4b());
    return report;
  }

  AxiomVerdict axiom0() {
    detail::Tally t("0", options_.budget);
    for (std::size_t a = 0; a < n(); ++a) {
      for (std::size_t b = 0; b < n(); ++b) {
        for (const M& f : homs_[a][b]) {
          if (!is_zero_object(cat_, objects_[b]) && !has_inverse(f, a, b)) continue;
          if (!t.count()) return t.finish();
          if (auto why = check_axiom0(cat_, f)) t.fail(a + b, [&] { return cat_.describe(f) + ": " + *why; });
        }
      }
    }
    return t.finish();
  }

  /// Kernels of deflations and the cokernel property, with both universal
  /// properties tested against every enumerated candidate.
  AxiomVerdict axiom1() {
    detail::Tally t("1", options_.budget);
    for (std::size_t a = 0; a < n(); ++a) {
      for (std::size_t b = 0; b < n(); ++b) {
        for (const M& p : homs_[a][b]) {
          if (!cat_.is_deflation(p)) continue;
          if (!t.count()) return t.finish();
          auto why = check_axiom1(cat_, p);
          if (!why) why = universal_failure(p, a, b);
          if (why) t.fail(a + b, [&] { return cat_.describe(p) + ": " + *why; });
        }
      }
    }
    return t.finish();
  }

  AxiomVerdict axiom2() {
    detail::Tally t("2", options_.budget);
    for (std::size_t a = 0; a < n(); ++a)
      for (std::size_t b = 0; b < n(); ++b)
        for (const M& f : homs_[a][b]) {
          if (!cat_.is_deflation(f)) continue;
          for (std::size_t c = 0; c < n(); ++c)
            for (const M& g : homs_[b][c]) {
              if (!cat_.is_deflation(g)) continue;
              if (!t.count()) return t.finish();
              if (auto why = check_axiom2(cat_, f, g)) {
                t.fail(a + b + c, [&] { return "f = " + cat_.describe(f) + ", g = " + cat_.describe(g) + ": " + *why; });
              }
            }
        }
    return t.finish();
  }

  AxiomVerdict axiom3() {
    detail::Tally t("3", options_.budget);
    for (std::size_t a = 0; a < n(); ++a)
      for (std::size_t b = 0; b < n(); ++b)
        for (const M& f : homs_[a][b]) {
          if (!cat_.is_deflation(f)) continue;
          for (std::size_t c = 0; c < n(); ++c)
            for (const M& g : homs_[b][c]) {
              if (!cat_.is_deflation(cat_.compose(g, f))) continue;
              if (!t.count()) return t.finish();
              if (auto why = check_axiom3(cat_, g)) {
                t.fail(a + b + c, [&] { return "f = " + cat_.describe(f) + ", g = " + cat_.describe(g) + ": " + *why; });
              }
            }
        }
    return t.finish();
  }

  /// Every grid with short exact columns and short exact lower rows. The lower
  /// maps g1, g3 are forced by g2; the top row is forced by the columns, and
  /// every choice of kernel in each column is enumerated.
  AxiomVerdict axiom4() {
    detail::Tally t("4", options_.budget);
    for (const Ses& row_b : ses_) {
      for (const Ses& row_c : ses_) {
        for (const M& g2 : homs_[row_b.b][row_c.b]) {
          if (!cat_.is_deflation(g2)) continue;
          const auto g1 = unique_fill(row_b.a, row_c.a, [&](const M& x) {
            return cat_.equal(cat_.compose(row_c.i, x), cat_.compose(g2, row_b.i));
          });
          if (!g1) continue;
          const auto g3 = unique_fill(row_b.c, row_c.c, [&](const M& x) {
            return cat_.equal(cat_.compose(x, row_b.p), cat_.compose(row_c.p, g2));
          });
          if (!g3) continue;
          const auto& col1 = partners(*g1);
          const auto& col2 = partners(g2);
          const auto& col3 = partners(*g3);
          for (const M& f1 : col1)
            for (const M& f2 : col2)
              for (const M& f3 : col3) {
                if (!t.count()) return t.finish();
                Grid3x3<M> g{{}, {}, row_b.i, row_b.p, row_c.i, row_c.p, f1, f2, f3, *g1, g2, *g3};
                std::optional<std::string> why;
                try {
                  g.a1 = cat_.kernel_lift(g2, f2, cat_.compose(row_b.i, f1));
                  g.a2 = cat_.kernel_lift(*g3, f3, cat_.compose(row_b.p, f2));
                  why = check_axiom4(cat_, g);
                } catch (const Error& e) {
                  why = std::string("top row: ") + e.what();
                }
                if (why) {
                  const std::size_t w = row_b.a + row_b.b + row_b.c + row_c.a + row_c.b + row_c.c +
                                        index_of(cat_.source(f1)) + index_of(cat_.source(f2)) +
                                        index_of(cat_.source(f3));
                  t.fail(w, [&] { return describe_grid(g) + ": " + *why; });
                }
              }
        }
      }
    }
    return t.finish();
  }

  AxiomVerdict axiom4a() {
    detail::Tally t("4a", options_.budget);
    if constexpr (HasPullbacks<C>) {
      for (std::size_t b = 0; b < n(); ++b)
        for (std::size_t d = 0; d < n(); ++d)
          for (const M& p : homs_[b][d]) {
            if (!cat_.is_deflation(p)) continue;
            for (std::size_t a = 0; a < n(); ++a)
              for (const M& f : homs_[a][d]) {
                if (!cat_.is_deflation(f)) continue;
                if (!t.count()) return t.finish();
                if (auto why = check_axiom4a(cat_, p, f)) {
                  t.fail(a + b + d, [&] { return "p = " + cat_.describe(p) + ", f = " + cat_.describe(f) + ": " + *why; });
                }
              }
          }
      return t.finish();
    } else {
      AxiomVerdict v{"4a", Status::Inconclusive, 0, {}, "instance has no pullbacks"};
      return v;
    }
  }

  AxiomVerdict axiom4b() {
    detail::Tally t("4b", options_.budget);
    for (const Ses& top : ses_) {
      for (const Ses& bottom : ses_) {
        if (top.c != bottom.c) continue;
        for (const M& f2 : homs_[top.b][bottom.b]) {
          if (!cat_.equal(cat_.compose(bottom.p, f2), top.p)) continue;
          if (!t.count()) return t.finish();
          if (auto why = check_axiom4b(cat_, top.i, bottom.i, bottom.p, f2)) {
            const std::size_t w = top.a + top.b + top.c + bottom.a + bottom.b;
            t.fail(w, [&] {
              return "phi1 = " + cat_.describe(top.i) + ", phi2 = " + cat_.describe(top.p) +
                     ", phi1' = " + cat_.describe(bottom.i) + ", phi2' = " + cat_.describe(bottom.p) +
                     ", f2 = " + cat_.describe(f2) + ": " + *why;
            });
          }
        }
      }
    }
    return t.finish();
  }

 private:
  /// A short exact sequence between enumerated objects, by object index.
  struct Ses {
    M i, p;
    std::size_t a, b, c;
  };

  std::size_t n() const { return objects_.size(); }

  std::size_t index_of(const O& x) const {
    for (std::size_t k = 0; k < n(); ++k)
      if (cat_.same_object(objects_[k], x)) return k;
    throw ContractViolation("object " + cat_.describe(x) + " is outside the enumeration");
  }

  bool has_inverse(const M& f, std::size_t a, std::size_t b) const {
    for (const M& g : homs_[b][a])
      if (is_identity(cat_, cat_.compose(g, f)) && is_identity(cat_, cat_.compose(f, g))) return true;
    return false;
  }

  /// Universal properties of kernel(p) and of p as its cokernel, against all
  /// enumerated test objects.
  std::optional<std::string> universal_failure(const M& p, std::size_t a, std::size_t b) const {
    const M k = cat_.kernel(p);
    const O kobj = cat_.source(k);
    for (std::size_t x = 0; x < n(); ++x) {
      const auto into_k = cat_.enumerate_morphisms(objects_[x], kobj);
      for (const M& g : homs_[x][a]) {
        const bool vanishes = is_zero_morphism(cat_, cat_.compose(p, g));
        std::size_t count = 0;
        for (const M& u : into_k)
          if (cat_.equal(cat_.compose(k, u), g)) ++count;
        if (count != (vanishes ? 1u : 0u)) return "kernel not universal for " + cat_.describe(g);
      }
      for (const M& g : homs_[a][x]) {
        const bool vanishes = is_zero_morphism(cat_, cat_.compose(g, k));
        std::size_t count = 0;
        for (const M& v : homs_[b][x])
          if (cat_.equal(cat_.compose(v, p), g)) ++count;
        if (count != (vanishes ? 1u : 0u)) return "not a cokernel of its kernel, test map " + cat_.describe(g);
      }
    }
    return std::nullopt;
  }

  void collect_short_exact() {
    ses_.clear();
    for (std::size_t b = 0; b < n(); ++b)
      for (std::size_t c = 0; c < n(); ++c)
        for (const M& p : homs_[b][c]) {
          if (!cat_.is_deflation(p)) continue;
          for (std::size_t a = 0; a < n(); ++a)
            for (const M& i : homs_[a][b]) {
              bool exact = false;
              try {
                exact = static_cast<bool>(check_short_exact(cat_, i, p));
              } catch (const Error&) {
              }
              if (exact) ses_.push_back({i, p, a, b, c});
            }
        }
  }

  /// All enumerated inflations i with (i, p) short exact.
  const std::vector<M>& partners(const M& p) {
    for (const auto& [key, list] : partner_cache_)
      if (cat_.equal(key, p) && cat_.same_object(cat_.source(key), cat_.source(p)) &&
          cat_.same_object(cat_.target(key), cat_.target(p)))
        return list;
    std::vector<M> list;
    for (const Ses& s : ses_)
      if (cat_.same_object(cat_.source(s.p), cat_.source(p)) && cat_.same_object(cat_.target(s.p), cat_.target(p)) &&
          cat_.equal(s.p, p))
        list.push_back(s.i);
    partner_cache_.emplace_back(p, std::move(list));
    return partner_cache_.back().second;
  }

  template <class Pred>
  std::optional<M> unique_fill(std::size_t from, std::size_t to, Pred pred) const {
    std::optional<M> found;
    for (const M& x : homs_[from][to]) {
      if (!pred(x)) continue;
      if (found) return std::nullopt;
      found = x;
    }
    return found;
  }

  std::string describe_grid(const Grid3x3<M>& g) const {
    return "a1 = " + cat_.describe(g.a1) + ", a2 = " + cat_.describe(g.a2) + ", b1 = " + cat_.describe(g.b1) +
           ", b2 = " + cat_.describe(g.b2) + ", c1 = " + cat_.describe(g.c1) + ", c2 = " + cat_.describe(g.c2) +
           ", f1 = " + cat_.describe(g.f1) + ", f2 = " + cat_.describe(g.f2) + ", f3 = " + cat_.describe(g.f3) +
           ", g1 = " + cat_.describe(g.g1) + ", g2 = " + cat_.describe(g.g2) + ", g3 = " + cat_.describe(g.g3);
  }

  const C& cat_;
  ExhaustiveOptions options_;
  std::vector<O> objects_;
  std::vector<std::vector<std::vector<M>>> homs_;
  std::vector<Ses> ses_;
  std::vector<std::pair<M, std::vector<M>>> partner_cache_;
};

template <Enumerable C>
AxiomReport verify_axioms_exhaustive(const C& cat, ExhaustiveOptions options = {}) {
  return ExhaustiveVerifier<C>(cat, options).run();
}

// ---------------------------------------------------------------------------
// Randomized verification.

/// Random diagrams for the randomized suite. Grids come with short exact
/// columns and lower rows; 4b inputs are (phi2, phi2', f2) with phi2' f2 = phi2.
template <class S, class C>
concept AxiomSampler = WeaklyExactCategory<C> && requires(S& s, const ObjectOf<C>& a) {
  { s.object() } -> std::convertible_to<ObjectOf<C>>;
  { s.morphism(a, a) } -> std::convertible_to<MorphismOf<C>>;
  { s.isomorphism(a) } -> std::convertible_to<MorphismOf<C>>;
  { s.deflation_from(a) } -> std::convertible_to<MorphismOf<C>>;
  { s.deflation_onto(a) } -> std::convertible_to<MorphismOf<C>>;
  { s.grid() } -> std::convertible_to<Grid3x3<MorphismOf<C>>>;
  { s.four_b_input() } -> std::convertible_to<std::tuple<MorphismOf<C>, MorphismOf<C>, MorphismOf<C>>>;
};

struct RandomizedOptions {
  std::size_t samples = 500;
  /// Draws allowed per qualifying sample before giving up (INCONCLUSIVE).
  std::size_t attempts_per_sample = 20;
};

template <WeaklyExactCategory C, class S>
  requires AxiomSampler<S, C>
AxiomReport verify_axioms_randomized(const C& cat, S& sampler, RandomizedOptions options = {}) {
  using M = MorphismOf<C>;
  AxiomReport report;
  const std::size_t max_draws = options.samples * options.attempts_per_sample;

  // Runs `draw` until `options.samples` qualifying diagrams were checked. draw
  // returns nullopt for a non-qualifying sample, else the failure (or "").
  auto run = [&](const std::string& name, auto draw) {
    AxiomVerdict v{name, Status::Pass, 0, {}, {}};
    std::size_t draws = 0;
    while (v.checked < options.samples && draws < max_draws) {
      ++draws;
      std::optional<std::string> outcome;
      try {
        outcome = draw();
      } catch (const Error& e) {
        outcome = std::string("error: ") + e.what();
      }
      if (!outcome) continue;
      ++v.checked;
      if (!outcome->empty()) {
        v.status = Status::Fail;
        v.counterexample = *outcome;
        break;
      }
    }
    if (v.status == Status::Pass && v.checked < options.samples) {
      v.status = Status::Inconclusive;
      v.note = "only " + std::to_string(v.checked) + " qualifying samples";
    }
    report.axioms.push_back(v);
  };
  auto verdict = [&](const std::optional<std::string>& why, auto describe) -> std::optional<std::string> {
    if (!why) return std::string();
    return describe() + ": " + *why;
  };

  std::size_t toggle = 0;
  run("0", [&]() -> std::optional<std::string> {
    const auto a = sampler.object();
    const M f = (toggle++ % 2 == 0) ? sampler.isomorphism(a) : cat.to_zero(a);
    return verdict(check_axiom0(cat, f), [&] { return cat.describe(f); });
  });
  run("1", [&]() -> std::optional<std::string> {
    const M p = sampler.deflation_from(sampler.object());
    return verdict(check_axiom1(cat, p), [&] { return cat.describe(p); });
  });
  run("2", [&]() -> std::optional<std::string> {
    const M f = sampler.deflation_from(sampler.object());
    const M g = sampler.deflation_from(cat.target(f));
    return verdict(check_axiom2(cat, f, g), [&] { return cat.describe(f) + " then " + cat.describe(g); });
  });
  run("3", [&]() -> std::optional<std::string> {
    const M f = sampler.deflation_from(sampler.object());
    const auto b = cat.target(f);
    // half the draws test an arbitrary g, half a g that makes g f a deflation by construction
    const M g = (toggle++ % 2 == 0) ? sampler.morphism(b, sampler.object()) : sampler.deflation_from(b);
    if (!cat.is_deflation(cat.compose(g, f))) return std::nullopt;
    return verdict(check_axiom3(cat, g), [&] { return cat.describe(f) + " then " + cat.describe(g); });
  });
  run("4", [&]() -> std::optional<std::string> {
    const auto g = sampler.grid();
    return verdict(check_axiom4(cat, g), [&] { return cat.describe(g.a1) + ", " + cat.describe(g.a2); });
  });
  if constexpr (HasPullbacks<C>) {
    run("4a", [&]() -> std::optional<std::string> {
      const auto d = sampler.object();
      const M p = sampler.deflation_onto(d);
      const M f = sampler.deflation_onto(d);
      return verdict(check_axiom4a(cat, p, f), [&] { return cat.describe(p) + ", " + cat.describe(f); });
    });
  } else {
    report.axioms.push_back({"4a", Status::Inconclusive, 0, {}, "instance has no pullbacks"});
  }
  run("4b", [&]() -> std::optional<std::string> {
    const auto [phi2, phi2p, f2] = sampler.four_b_input();
    if (!cat.is_deflation(phi2) || !cat.is_deflation(phi2p)) return std::nullopt;
    const M phi1 = cat.kernel(phi2);
    const M phi1p = cat.kernel(phi2p);
    return verdict(check_axiom4b(cat, phi1, phi1p, phi2p, f2), [&] { return cat.describe(f2); });
  });
  return report;
}

}  // namespace wex::engine
