#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wex/cli/parser.hpp"
#include "wex/chain/hom_complex.hpp"

namespace wex::cli {

enum ExitCode : int {
  kOk = 0,
  kAnsweredNo = 1,
  kInputError = 2,
  kHypothesisViolation = 3,
};

enum class Format { Text, Machine };

struct Options {
  Format format = Format::Text;
  std::uint64_t seed = 1;
  /// Randomized samples (fgab) or diagrams per axiom (pointed sets).
  std::optional<std::size_t> budget;
  /// Instance tag for `axioms`: pointed-sets or fgab.
  std::string instance = "pointed-sets";
  /// collapse (default) or all-surjections, pointed sets only.
  std::string deflations = "collapse";
  std::size_t max_size = 4;
};

struct Outcome {
  int exit_code = kOk;
  std::string output;
};

/// H^i (or H_k for homological complexes) of a complex of the document. The
/// complex is the one named by `command homology NAME`, or the only one.
Outcome cmd_homology(const Document& d, const Options& o);
/// Six-term sequence of `command snake phi1 phi2 phi1' phi2' f1 f2 f3`.
Outcome cmd_snake(const Document& d, const Options& o);
/// Long exact sequence of `command les u v` for chain maps u: A -> A', v: A' -> A''.
Outcome cmd_les(const Document& d, const Options& o);
/// `command verify exact f g ...`, `verify ses i p`, `verify deflation f`,
/// `verify inflation f`, `verify iso f`.
Outcome cmd_verify(const Document& d, const Options& o);
Outcome cmd_axioms(const Options& o);

/// Dispatch by subcommand name with error-to-exit-code mapping. Messages for
/// exit codes 2 and 3 go to `output` as a single "error: ..." line.
Outcome run(const std::string& subcommand, const std::optional<std::string>& path, const Options& o);

/// The complex of a declaration in internal (cohomological) indexing;
/// homological complexes occupy degrees -n..0.
chain::FgabComplex build_complex(const Document& d, const ComplexDecl& x);
chain::FgabChainMap build_chain_map(const Document& d, const ChainMapDecl& f);

/// "[1]", "[1, 0; 0, 1]", "[]".
std::string format_matrix(const fgab::IntMatrix& m);

}  // namespace wex::cli
