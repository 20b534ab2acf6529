#include <CLI11.hpp>

#include <iostream>

#include "wex/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace wex::cli;
  CLI::App app{"wexcat: snake lemma, cohomology and axiom checks for weakly exact categories"};
  app.require_subcommand(1);

  Options options;
  std::string format = "text";
  std::size_t budget = 0;
  std::string path;

  auto common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file) sub->add_option("file", path, "input file")->required();
    sub->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--seed", options.seed, "seed for randomized checks");
    sub->add_option("--budget", budget, "samples (fgab) or diagrams per axiom (pointed sets)");
  };
  common(app.add_subcommand("homology", "cohomology of a complex, per degree"), true);
  common(app.add_subcommand("snake", "six-term sequence of a snake diagram"), true);
  common(app.add_subcommand("les", "long exact sequence of a pointwise short exact sequence of complexes"), true);
  common(app.add_subcommand("verify", "check exactness properties of named morphisms"), true);
  auto* axioms = app.add_subcommand("axioms", "verify the axioms of an instance");
  common(axioms, false);
  axioms->add_option("--instance", options.instance, "pointed-sets or fgab");
  axioms->add_option("--deflations", options.deflations, "collapse or all-surjections (pointed sets)");
  axioms->add_option("--max-size", options.max_size, "largest pointed set, basepoint included");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  options.format = format == "machine" ? Format::Machine : Format::Text;
  for (auto* sub : app.get_subcommands()) {
    if (sub->count("--budget")) options.budget = budget;
    const auto out = run(sub->get_name(), path.empty() ? std::nullopt : std::optional<std::string>(path), options);
    (out.exit_code == kInputError || out.exit_code == kHypothesisViolation ? std::cerr : std::cout) << out.output;
    return out.exit_code;
  }
  return kInputError;
}
