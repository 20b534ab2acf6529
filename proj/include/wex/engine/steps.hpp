#pragma once

#include <string>
#include <utility>

#include "wex/core/category.hpp"
#include "wex/core/exactness.hpp"

namespace wex::engine {

/// Runs one step of a construction. A contract violation inside a step that
/// the theory guarantees is reported as a failed conclusion of that step.
template <class F>
auto step(const std::string& name, F&& fn) {
  try {
    return std::forward<F>(fn)();
  } catch (const ContractViolation& e) {
    throw ConclusionFailure(name, e.what());
  }
}

template <WeaklyExactCategory C>
void expect_short_exact(const C& cat, const MorphismOf<C>& i, const MorphismOf<C>& p, const std::string& name) {
  const CheckReport r = step(name, [&] { return check_short_exact(cat, i, p); });
  if (!r) throw ConclusionFailure(name, r.clause);
}

template <WeaklyExactCategory C>
void expect_deflation(const C& cat, const MorphismOf<C>& f, const std::string& name) {
  if (!cat.is_deflation(f)) throw ConclusionFailure(name, cat.describe(f) + " is not a deflation");
}

template <WeaklyExactCategory C>
void expect_equal(const C& cat, const MorphismOf<C>& f, const MorphismOf<C>& g, const std::string& name) {
  if (!cat.same_object(cat.source(f), cat.source(g)) || !cat.same_object(cat.target(f), cat.target(g)) ||
      !cat.equal(f, g)) {
    throw ConclusionFailure(name, cat.describe(f) + " differs from " + cat.describe(g));
  }
}

template <WeaklyExactCategory C>
void require_short_exact(const C& cat, const MorphismOf<C>& i, const MorphismOf<C>& p, const std::string& clause) {
  if (!composable(cat, p, i)) throw HypothesisViolation(clause, "maps are not composable");
  const CheckReport r = check_short_exact(cat, i, p);
  if (!r) throw HypothesisViolation(clause, r.clause);
}

template <WeaklyExactCategory C>
void require_commutes(const C& cat, const MorphismOf<C>& lhs_outer, const MorphismOf<C>& lhs_inner,
                      const MorphismOf<C>& rhs_outer, const MorphismOf<C>& rhs_inner, const std::string& clause) {
  if (!composable(cat, lhs_outer, lhs_inner) || !composable(cat, rhs_outer, rhs_inner)) {
    throw HypothesisViolation(clause, "maps are not composable");
  }
  const auto l = cat.compose(lhs_outer, lhs_inner);
  const auto r = cat.compose(rhs_outer, rhs_inner);
  if (!cat.same_object(cat.source(l), cat.source(r)) || !cat.same_object(cat.target(l), cat.target(r)) ||
      !cat.equal(l, r)) {
    throw HypothesisViolation(clause, "square does not commute");
  }
}

}  // namespace wex::engine
