#pragma once

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "wex/core/errors.hpp"

namespace wex {

/// The contract every instance of a weakly exact category fulfills.
///
/// Instances are immutable values; every operation is const. `compose(g, f)`
/// is g∘f and is defined when `target(f)` and `source(g)` are the same object.
/// Objects compare by presentation (`same_object`), never by isomorphism.
///
/// Kernels are only demanded of deflations and cokernels of inflations. The
/// lifts take a morphism `k` (resp. `c`) that the caller claims to be a kernel
/// of `p` (resp. a cokernel of `i`) and throw ContractViolation when the
/// factorization does not exist or the vanishing precondition fails.
template <class C>
concept WeaklyExactCategory =
    requires(const C& cat, const typename C::Object& a, const typename C::Morphism& f) {
      typename C::Object;
      typename C::Morphism;
      { cat.zero_object() } -> std::convertible_to<typename C::Object>;
      { cat.same_object(a, a) } -> std::convertible_to<bool>;
      { cat.source(f) } -> std::convertible_to<typename C::Object>;
      { cat.target(f) } -> std::convertible_to<typename C::Object>;
      { cat.identity(a) } -> std::convertible_to<typename C::Morphism>;
      { cat.compose(f, f) } -> std::convertible_to<typename C::Morphism>;
      { cat.equal(f, f) } -> std::convertible_to<bool>;
      { cat.to_zero(a) } -> std::convertible_to<typename C::Morphism>;
      { cat.from_zero(a) } -> std::convertible_to<typename C::Morphism>;
      { cat.is_deflation(f) } -> std::convertible_to<bool>;
      { cat.kernel(f) } -> std::convertible_to<typename C::Morphism>;
      { cat.cokernel(f) } -> std::convertible_to<typename C::Morphism>;
      { cat.kernel_lift(f, f, f) } -> std::convertible_to<typename C::Morphism>;
      { cat.cokernel_colift(f, f, f) } -> std::convertible_to<typename C::Morphism>;
      { cat.describe(a) } -> std::convertible_to<std::string>;
      { cat.describe(f) } -> std::convertible_to<std::string>;
    };

template <WeaklyExactCategory C>
using ObjectOf = typename C::Object;
template <WeaklyExactCategory C>
using MorphismOf = typename C::Morphism;

/// Commuting square over a cospan B --p--> D <--f-- A.
/// `first` maps to the source of the deflation p, `second` to the source of f;
/// `second` is the base change of p along f.
template <class Morphism>
struct PullbackSquare {
  Morphism first;
  Morphism second;
};

/// Optional capability: pullbacks of deflations along arbitrary morphisms.
template <class C>
concept HasPullbacks =
    WeaklyExactCategory<C> &&
    requires(const C& cat, const typename C::Morphism& f,
             const PullbackSquare<typename C::Morphism>& sq) {
      { cat.pullback_of_deflation(f, f) } -> std::convertible_to<PullbackSquare<typename C::Morphism>>;
      // pullback_lift(square, x, y): the unique u with first∘u = x, second∘u = y.
      { cat.pullback_lift(sq, f, f) } -> std::convertible_to<typename C::Morphism>;
    };

/// Optional capability: exhaustive enumeration of small objects and hom-sets.
template <class C>
concept Enumerable =
    WeaklyExactCategory<C> && requires(const C& cat, const typename C::Object& a, std::size_t n) {
      { cat.enumerate_objects(n) } -> std::convertible_to<std::vector<typename C::Object>>;
      { cat.enumerate_morphisms(a, a) } -> std::convertible_to<std::vector<typename C::Morphism>>;
    };

template <WeaklyExactCategory C>
bool composable(const C& cat, const MorphismOf<C>& g, const MorphismOf<C>& f) {
  return cat.same_object(cat.target(f), cat.source(g));
}

/// A --> 0 --> B.
template <WeaklyExactCategory C>
MorphismOf<C> zero_morphism(const C& cat, const ObjectOf<C>& a, const ObjectOf<C>& b) {
  return cat.compose(cat.from_zero(b), cat.to_zero(a));
}

template <WeaklyExactCategory C>
bool is_zero_object(const C& cat, const ObjectOf<C>& a) {
  return cat.same_object(a, cat.zero_object());
}

template <WeaklyExactCategory C>
bool is_zero_morphism(const C& cat, const MorphismOf<C>& f) {
  return cat.equal(f, zero_morphism(cat, cat.source(f), cat.target(f)));
}

template <WeaklyExactCategory C>
bool is_identity(const C& cat, const MorphismOf<C>& f) {
  return cat.same_object(cat.source(f), cat.target(f)) && cat.equal(f, cat.identity(cat.source(f)));
}

/// Composition that reports a domain mismatch as a contract violation.
template <WeaklyExactCategory C>
MorphismOf<C> checked_compose(const C& cat, const MorphismOf<C>& g, const MorphismOf<C>& f) {
  if (!composable(cat, g, f)) {
    throw ContractViolation("cannot compose " + cat.describe(g) + " after " + cat.describe(f));
  }
  return cat.compose(g, f);
}

/// Composes right to left: compose_all(cat, {h, g, f}) = h∘g∘f.
template <WeaklyExactCategory C>
MorphismOf<C> compose_all(const C& cat, std::initializer_list<MorphismOf<C>> chain) {
  auto it = chain.end();
  --it;
  MorphismOf<C> acc = *it;
  while (it != chain.begin()) {
    --it;
    acc = checked_compose(cat, *it, acc);
  }
  return acc;
}

}  // namespace wex
