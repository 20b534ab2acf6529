#pragma once

#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wex/fgab/group.hpp"
#include "wex/pointed/pointed_sets.hpp"

namespace wex::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class Instance { Fgab, Pointed };

/// Objects are listed in file order, with the matrix or table of every
/// morphism resolved against them at parse time.
struct ComplexDecl {
  std::string name;
  /// Homological complexes list C_0, C_1, ... and boundaries d_k: C_k -> C_{k-1}.
  bool homological = false;
  int lo = 0;
  std::vector<std::string> objects;
  std::vector<std::string> maps;
};

struct ChainMapDecl {
  std::string name, source, target;
  /// One component per object of the source, in the order listed there.
  std::vector<std::string> maps;
};

struct Statement {
  std::size_t line = 0;
  std::vector<std::string> words;
};

struct Document {
  Instance instance = Instance::Fgab;

  std::vector<std::string> object_names;
  std::map<std::string, fgab::FpAbelianGroup> groups;
  std::map<std::string, pointed::PointedSet> sets;

  struct MorphismDecl {
    std::string name, source, target;
  };
  std::vector<MorphismDecl> morphisms;
  std::map<std::string, fgab::AbMorphism> homs;
  std::map<std::string, pointed::PointedMap> maps;

  std::vector<ComplexDecl> complexes;
  std::vector<ChainMapDecl> chain_maps;
  std::vector<Statement> commands;
  std::vector<Statement> results;

  bool has_object(const std::string& name) const;
  bool has_morphism(const std::string& name) const;
  const ComplexDecl& complex(const std::string& name) const;
  const ChainMapDecl& chain_map(const std::string& name) const;
  /// First `command` statement whose verb is `verb`.
  std::optional<Statement> command(const std::string& verb) const;

  void add_group(const std::string& name, const fgab::FpAbelianGroup& g);
  void add_set(const std::string& name, const pointed::PointedSet& s);
  void add_hom(const std::string& name, const std::string& source, const std::string& target,
               const fgab::AbMorphism& f);
  void add_map(const std::string& name, const std::string& source, const std::string& target,
               const pointed::PointedMap& f);
};

Document parse(std::istream& in);
Document parse_string(const std::string& text);
Document parse_file(const std::string& path);

/// Canonical serialization: instance, objects, morphisms, complexes, chain
/// maps, commands, results. parse(write(d)) writes back to the same text.
std::string write(const Document& d);

/// Quotes a word when it would not survive tokenization as is.
std::string quote(const std::string& word);

}  // namespace wex::cli
