#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wex/core/category.hpp"

namespace wex {

template <class Morphism>
struct ShortExactSequence {
  Morphism inflation;  // A --> B
  Morphism deflation;  // B --> C
};

/// f = inflation_part ∘ deflation_part with
///   kernel --> source(f) --deflation_part--> image   short exact, and
///   image --inflation_part--> target(f) --cokernel--> coker  short exact.
template <class Morphism>
struct AdmissibleFactorization {
  Morphism morphism;
  Morphism deflation_part;
  Morphism inflation_part;
  Morphism kernel;
  Morphism cokernel;
};

/// Optional capability: factor a morphism as a deflation followed by an
/// inflation, or report that no such factorization exists.
template <class C>
concept HasAdmissibleFactorization =
    WeaklyExactCategory<C> && requires(const C& cat, const typename C::Morphism& f) {
      {
        cat.admissible_factorization(f)
      } -> std::convertible_to<std::optional<AdmissibleFactorization<typename C::Morphism>>>;
    };

/// Outcome of a check; `clause` names the first clause that failed.
struct CheckReport {
  bool holds = true;
  std::string clause;

  explicit operator bool() const { return holds; }
  static CheckReport pass() { return {}; }
  static CheckReport fail(std::string why) { return {false, std::move(why)}; }
};

inline constexpr const char* kNotDeflation = "p not a deflation";
inline constexpr const char* kNotCokernel = "p not cokernel of i";
inline constexpr const char* kNotKernel = "i not kernel of p";

/// True iff f and g are mutually inverse.
template <WeaklyExactCategory C>
bool are_inverse(const C& cat, const MorphismOf<C>& f, const MorphismOf<C>& g) {
  if (!composable(cat, g, f) || !composable(cat, f, g)) return false;
  return is_identity(cat, cat.compose(g, f)) && is_identity(cat, cat.compose(f, g));
}

/// Decides whether A --i--> B --p--> C is short exact: p is a deflation, p is a
/// cokernel of i and i is a kernel of p. Universality is established by
/// comparing with the instance's own cokernel/kernel through lifts in both
/// directions that must compose to identities.
template <WeaklyExactCategory C>
CheckReport check_short_exact(const C& cat, const MorphismOf<C>& i, const MorphismOf<C>& p) {
  using M = MorphismOf<C>;
  if (!composable(cat, p, i)) {
    throw ContractViolation("check_short_exact: target(i) != source(p)");
  }
  if (!cat.is_deflation(p)) return CheckReport::fail(kNotDeflation);
  try {
    const M c = cat.cokernel(i);
    const M forward = cat.cokernel_colift(i, c, p);   // coker(i) --> C
    const M backward = cat.cokernel_colift(i, p, c);  // C --> coker(i)
    if (!are_inverse(cat, forward, backward)) return CheckReport::fail(kNotCokernel);
  } catch (const Error&) {
    return CheckReport::fail(kNotCokernel);
  }
  try {
    const M k = cat.kernel(p);
    const M forward = cat.kernel_lift(p, k, i);   // A --> ker(p)
    const M backward = cat.kernel_lift(p, i, k);  // ker(p) --> A
    if (!are_inverse(cat, forward, backward)) return CheckReport::fail(kNotKernel);
  } catch (const Error&) {
    return CheckReport::fail(kNotKernel);
  }
  return CheckReport::pass();
}

template <WeaklyExactCategory C>
CheckReport check_short_exact(const C& cat, const ShortExactSequence<MorphismOf<C>>& ses) {
  return check_short_exact(cat, ses.inflation, ses.deflation);
}

/// Checks an inflation by comparing it with the kernel of its own cokernel.
template <WeaklyExactCategory C>
bool is_inflation(const C& cat, const MorphismOf<C>& i) {
  try {
    return static_cast<bool>(check_short_exact(cat, i, cat.cokernel(i)));
  } catch (const Error&) {
    return false;
  }
}

/// A deflation with zero kernel; then it is the cokernel of 0 --> A, i.e. an
/// isomorphism.
template <WeaklyExactCategory C>
bool is_isomorphism(const C& cat, const MorphismOf<C>& f) {
  if (!cat.is_deflation(f)) return false;
  // The kernel may be presented as something isomorphic to, but not equal
  // to, the zero object.
  const auto k = cat.source(cat.kernel(f));
  return is_zero_morphism(cat, cat.identity(k));
}

/// Inverse of an isomorphism, as the colift of the identity through f viewed
/// as the cokernel of its (zero) kernel.
template <WeaklyExactCategory C>
MorphismOf<C> inverse(const C& cat, const MorphismOf<C>& f) {
  if (!is_isomorphism(cat, f)) throw ContractViolation("inverse: " + cat.describe(f) + " is not an isomorphism");
  const auto k = cat.kernel(f);
  return cat.cokernel_colift(k, f, cat.identity(cat.source(f)));
}

template <WeaklyExactCategory C>
CheckReport check_factorization(const C& cat, const AdmissibleFactorization<MorphismOf<C>>& fac) {
  if (!cat.equal(checked_compose(cat, fac.inflation_part, fac.deflation_part), fac.morphism)) {
    return CheckReport::fail("factorization does not compose to the morphism");
  }
  if (auto r = check_short_exact(cat, fac.kernel, fac.deflation_part); !r) {
    return CheckReport::fail("kernel side: " + r.clause);
  }
  if (auto r = check_short_exact(cat, fac.inflation_part, fac.cokernel); !r) {
    return CheckReport::fail("cokernel side: " + r.clause);
  }
  return CheckReport::pass();
}

/// Factorization p = id∘p of a deflation with known kernel k.
template <WeaklyExactCategory C>
AdmissibleFactorization<MorphismOf<C>> deflation_factorization(const C& cat, const MorphismOf<C>& p,
                                                               const MorphismOf<C>& k) {
  const auto b = cat.target(p);
  return {p, p, cat.identity(b), k, cat.to_zero(b)};
}

/// Factorization i = i∘id of an inflation with known cokernel c.
template <WeaklyExactCategory C>
AdmissibleFactorization<MorphismOf<C>> inflation_factorization(const C& cat, const MorphismOf<C>& i,
                                                               const MorphismOf<C>& c) {
  const auto a = cat.source(i);
  return {i, cat.identity(a), i, cat.from_zero(a), c};
}

template <WeaklyExactCategory C>
AdmissibleFactorization<MorphismOf<C>> identity_factorization(const C& cat, const ObjectOf<C>& a) {
  const auto id = cat.identity(a);
  return {id, id, id, cat.from_zero(a), cat.to_zero(a)};
}

/// Per-joint verdicts of a long sequence A_0 --> A_1 --> ... --> A_n.
struct LongExactReport {
  bool exact = true;
  /// Object index of the first failing joint, if any.
  std::optional<std::size_t> failing_object;
  std::string clause;
  /// joint_holds[j] is the verdict at A_j, j = 0..n.
  std::vector<bool> joint_holds;

  explicit operator bool() const { return exact; }
};

/// Exactness of a finite sequence given a factorization A_{j-1} --> Z_j --> A_j
/// of every morphism: each Z_j --> A_j --> Z_{j+1} must be short exact. At the
/// ends, the first deflation part must sit in a short exact sequence
/// Z_0 --> A_0 --> Z_1 and the last inflation part in Z_n --> A_n --> Z_{n+1};
/// the missing Z's are the kernel resp. cokernel computed by the instance.
template <WeaklyExactCategory C>
LongExactReport check_long_exact(const C& cat, const std::vector<MorphismOf<C>>& seq,
                                 const std::vector<AdmissibleFactorization<MorphismOf<C>>>& facs) {
  if (seq.size() != facs.size()) {
    throw ContractViolation("check_long_exact: " + std::to_string(seq.size()) + " morphisms but " +
                            std::to_string(facs.size()) + " factorizations");
  }
  LongExactReport report;
  if (seq.empty()) return report;
  for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
    if (!composable(cat, seq[j + 1], seq[j])) {
      throw ContractViolation("check_long_exact: morphisms " + std::to_string(j) + " and " +
                              std::to_string(j + 1) + " are not composable");
    }
  }
  auto record = [&](std::size_t object, CheckReport r) {
    report.joint_holds.push_back(r.holds);
    if (!r.holds && report.exact) {
      report.exact = false;
      report.failing_object = object;
      report.clause = r.clause;
    }
  };
  for (std::size_t j = 0; j < seq.size(); ++j) {
    const auto& f = facs[j];
    if (!cat.equal(f.morphism, seq[j]) ||
        !cat.equal(checked_compose(cat, f.inflation_part, f.deflation_part), seq[j])) {
      throw ContractViolation("check_long_exact: factorization " + std::to_string(j) +
                              " does not compose to its morphism");
    }
  }
  // A_0
  {
    const auto& e = facs.front().deflation_part;
    CheckReport r = cat.is_deflation(e) ? check_short_exact(cat, cat.kernel(e), e)
                                        : CheckReport::fail(kNotDeflation);
    record(0, r);
  }
  for (std::size_t j = 1; j < seq.size(); ++j) {
    record(j, check_short_exact(cat, facs[j - 1].inflation_part, facs[j].deflation_part));
  }
  // A_n
  {
    const auto& m = facs.back().inflation_part;
    CheckReport r;
    try {
      r = check_short_exact(cat, m, cat.cokernel(m));
    } catch (const Error&) {
      r = CheckReport::fail(kNotKernel);
    }
    record(seq.size(), r);
  }
  return report;
}

}  // namespace wex
