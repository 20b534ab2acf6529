#pragma once

#include <cstdint>
#include <random>

#include "wex/core/exactness.hpp"
#include "wex/fgab/category.hpp"

namespace wex::fgab {

struct SamplerOptions {
  std::size_t max_generators = 3;
  std::size_t max_relations = 3;
  long max_entry = 5;
};

/// Seeded source of random groups, morphisms and short exact sequences.
/// Identical seeds produce identical streams.
class FgabSampler {
 public:
  explicit FgabSampler(std::uint64_t seed, SamplerOptions options = {});

  /// Random presentation, usually not canonical.
  FpAbelianGroup group();
  FpAbelianGroup free_group(std::size_t max_rank);
  AbMorphism morphism(const FpAbelianGroup& a, const FpAbelianGroup& b);
  IntMatrix matrix(std::size_t rows, std::size_t cols);
  /// Image of a random morphism followed by its cokernel.
  ShortExactSequence<AbMorphism> short_exact();
  /// Short exact sequence ending in the given object: kernel of a random
  /// deflation onto it.
  ShortExactSequence<AbMorphism> short_exact_onto(const FpAbelianGroup& c);
  long entry(long bound);
  std::size_t index(std::size_t bound);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  SamplerOptions options_;
  FgabCategory cat_;
};

}  // namespace wex::fgab
