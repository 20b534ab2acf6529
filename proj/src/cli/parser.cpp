#include "wex/cli/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "wex/core/errors.hpp"

namespace wex::cli {

using fgab::AbMorphism;
using fgab::FpAbelianGroup;
using fgab::IntMatrix;

bool Document::has_object(const std::string& name) const {
  return std::find(object_names.begin(), object_names.end(), name) != object_names.end();
}

bool Document::has_morphism(const std::string& name) const {
  return std::any_of(morphisms.begin(), morphisms.end(), [&](const auto& m) { return m.name == name; });
}

const ComplexDecl& Document::complex(const std::string& name) const {
  for (const auto& c : complexes)
    if (c.name == name) return c;
  throw ParseError(0, "unknown complex '" + name + "'");
}

const ChainMapDecl& Document::chain_map(const std::string& name) const {
  for (const auto& c : chain_maps)
    if (c.name == name) return c;
  throw ParseError(0, "unknown chain map '" + name + "'");
}

std::optional<Statement> Document::command(const std::string& verb) const {
  for (const auto& c : commands)
    if (!c.words.empty() && c.words[0] == verb) return c;
  return std::nullopt;
}

void Document::add_group(const std::string& name, const FpAbelianGroup& g) {
  object_names.push_back(name);
  groups.emplace(name, g);
}

void Document::add_set(const std::string& name, const pointed::PointedSet& s) {
  object_names.push_back(name);
  sets.emplace(name, s);
}

void Document::add_hom(const std::string& name, const std::string& source, const std::string& target,
                       const AbMorphism& f) {
  morphisms.push_back({name, source, target});
  homs.emplace(name, f);
}

void Document::add_map(const std::string& name, const std::string& source, const std::string& target,
                       const pointed::PointedMap& f) {
  morphisms.push_back({name, source, target});
  maps.emplace(name, f);
}

namespace {

std::vector<std::string> tokenize(const std::string& line, std::size_t n) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::string word;
    if (c == '"') {
      ++i;
      bool closed = false;
      while (i < line.size()) {
        if (line[i] == '\\' && i + 1 < line.size()) {
          word += line[i + 1];
          i += 2;
        } else if (line[i] == '"') {
          closed = true;
          ++i;
          break;
        } else {
          word += line[i++];
        }
      }
      if (!closed) throw ParseError(n, "unterminated string");
    } else {
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') word += line[i++];
    }
    out.push_back(word);
  }
  return out;
}

bool is_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
  });
}

class Cursor {
 public:
  Cursor(const std::vector<std::string>& w, std::size_t line) : w_(w), line_(line) {}

  bool done() const { return pos_ >= w_.size(); }
  const std::string& peek() const { return w_[pos_]; }
  std::string next(const std::string& what) {
    if (done()) fail("expected " + what);
    return w_[pos_++];
  }
  void expect(const std::string& word) {
    const std::string got = next("'" + word + "'");
    if (got != word) fail("expected '" + word + "', got '" + got + "'");
  }
  bool accept(const std::string& word) {
    if (!done() && peek() == word) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string name(const std::string& what) {
    const std::string s = next(what);
    if (!is_name(s)) fail("'" + s + "' is not a valid " + what);
    return s;
  }
  long long integer(const std::string& what) {
    const std::string s = next(what);
    long long v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail("'" + s + "' is not an integer");
    return v;
  }
  std::size_t count(const std::string& what) {
    const long long v = integer(what);
    if (v < 0) fail(what + " must be non-negative");
    return static_cast<std::size_t>(v);
  }
  /// RxC followed by R*C integers, row-major.
  IntMatrix matrix() {
    const std::string dims = next("matrix dimensions RxC");
    const auto x = dims.find('x');
    std::size_t r = 0, c = 0;
    auto parse_dim = [&](std::string_view s, std::size_t& v) {
      const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      return ec == std::errc() && p == s.data() + s.size() && !s.empty();
    };
    if (x == std::string::npos || !parse_dim(std::string_view(dims).substr(0, x), r) ||
        !parse_dim(std::string_view(dims).substr(x + 1), c)) {
      fail("'" + dims + "' is not a matrix size RxC");
    }
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(integer("matrix entry"));
    return m;
  }
  void end() {
    if (!done()) fail("unexpected '" + peek() + "'");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

 private:
  const std::vector<std::string>& w_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Document run(std::istream& in) {
    std::string text;
    std::size_t n = 0;
    while (std::getline(in, text)) {
      ++n;
      const auto words = tokenize(text, n);
      if (words.empty()) continue;
      statement(words, n);
    }
    return std::move(d_);
  }

 private:
  void statement(const std::vector<std::string>& words, std::size_t n) {
    Cursor c(words, n);
    const std::string verb = c.next("statement");
    if (verb == "instance") {
      if (seen_declaration_) c.fail("instance must come before any declaration");
      const std::string tag = c.next("instance tag");
      if (tag == "fgab") {
        d_.instance = Instance::Fgab;
      } else if (tag == "pointed") {
        d_.instance = Instance::Pointed;
      } else {
        c.fail("unknown instance '" + tag + "'");
      }
      c.end();
      return;
    }
    if (verb == "command" || verb == "result") {
      Statement s{n, {words.begin() + 1, words.end()}};
      if (s.words.empty()) c.fail(verb + " needs at least one word");
      (verb == "command" ? d_.commands : d_.results).push_back(std::move(s));
      return;
    }
    seen_declaration_ = true;
    if (verb == "object") return object(c);
    if (verb == "morphism") return morphism(c);
    if (verb == "complex") return complex(c);
    if (verb == "chainmap") return chain_map(c);
    c.fail("unknown statement '" + verb + "'");
  }

  void fresh(Cursor& c, const std::string& name) {
    if (d_.has_object(name) || d_.has_morphism(name) || used_.count(name)) c.fail("'" + name + "' already declared");
  }

  void object(Cursor& c) {
    const std::string name = c.name("object name");
    fresh(c, name);
    if (d_.instance == Instance::Pointed) {
      c.expect("size");
      const std::size_t size = c.count("size");
      if (size == 0) c.fail("a pointed set has at least its basepoint");
      c.end();
      d_.add_set(name, pointed::PointedSet{size});
      return;
    }
    c.expect("gens");
    const std::size_t gens = c.count("number of generators");
    IntMatrix rel(gens, 0);
    if (c.accept("relations")) {
      rel = c.matrix();
      if (rel.rows() != gens) c.fail("relation matrix must have one row per generator");
    }
    c.end();
    d_.add_group(name, FpAbelianGroup(gens, rel));
  }

  std::string known_object(Cursor& c) {
    const std::string s = c.name("object name");
    if (!d_.has_object(s)) c.fail("unknown object '" + s + "'");
    return s;
  }

  void morphism(Cursor& c) {
    const std::string name = c.name("morphism name");
    fresh(c, name);
    c.expect(":");
    const std::string src = known_object(c);
    c.expect("->");
    const std::string tgt = known_object(c);
    if (d_.instance == Instance::Pointed) {
      c.expect("table");
      std::vector<std::size_t> table;
      while (!c.done()) table.push_back(c.count("table entry"));
      try {
        d_.add_map(name, src, tgt, pointed::make_map(d_.sets.at(src).size, d_.sets.at(tgt).size, table));
      } catch (const ContractViolation& e) {
        c.fail(e.what());
      }
      return;
    }
    const IntMatrix m = c.matrix();
    c.end();
    try {
      d_.add_hom(name, src, tgt, AbMorphism(d_.groups.at(src), d_.groups.at(tgt), m));
    } catch (const ContractViolation& e) {
      c.fail(e.what());
    }
  }

  std::vector<std::string> morphism_list(Cursor& c) {
    std::vector<std::string> out;
    while (!c.done()) {
      const std::string s = c.name("morphism name");
      if (!d_.has_morphism(s)) c.fail("unknown morphism '" + s + "'");
      out.push_back(s);
    }
    return out;
  }

  const Document::MorphismDecl& decl(const std::string& name) const {
    return *std::find_if(d_.morphisms.begin(), d_.morphisms.end(), [&](const auto& m) { return m.name == name; });
  }

  void complex(Cursor& c) {
    ComplexDecl x;
    x.name = c.name("complex name");
    fresh(c, x.name);
    const std::string kind = c.next("'homological' or 'cohomological'");
    if (kind == "homological") {
      x.homological = true;
    } else if (kind == "cohomological") {
      x.lo = static_cast<int>(c.integer("lowest degree"));
    } else {
      c.fail("expected 'homological' or 'cohomological', got '" + kind + "'");
    }
    c.expect("objects");
    while (!c.done() && c.peek() != "maps") x.objects.push_back(known_object(c));
    if (c.accept("maps")) x.maps = morphism_list(c);
    const std::size_t expected = x.objects.empty() ? 0 : x.objects.size() - 1;
    if (x.maps.size() != expected) {
      c.fail("complex with " + std::to_string(x.objects.size()) + " objects needs " + std::to_string(expected) +
             " maps, got " + std::to_string(x.maps.size()));
    }
    for (std::size_t k = 0; k < x.maps.size(); ++k) {
      // cohomological: d_k: X_k -> X_{k+1}; homological: d_{k+1}: C_{k+1} -> C_k
      const auto& m = decl(x.maps[k]);
      const std::string& from = x.homological ? x.objects[k + 1] : x.objects[k];
      const std::string& to = x.homological ? x.objects[k] : x.objects[k + 1];
      if (m.source != from || m.target != to) {
        c.fail("map '" + m.name + "' goes " + m.source + " -> " + m.target + ", expected " + from + " -> " + to);
      }
    }
    used_.insert(x.name);
    d_.complexes.push_back(std::move(x));
  }

  void chain_map(Cursor& c) {
    ChainMapDecl f;
    f.name = c.name("chain map name");
    fresh(c, f.name);
    c.expect(":");
    f.source = c.name("complex name");
    c.expect("->");
    f.target = c.name("complex name");
    const ComplexDecl* a = find_complex(f.source);
    const ComplexDecl* b = find_complex(f.target);
    if (!a || !b) c.fail("unknown complex in chain map '" + f.name + "'");
    if (a->homological != b->homological) c.fail("chain map between homological and cohomological complexes");
    c.expect("maps");
    f.maps = morphism_list(c);
    if (f.maps.size() != a->objects.size()) {
      c.fail("chain map needs " + std::to_string(a->objects.size()) + " components, got " +
             std::to_string(f.maps.size()));
    }
    for (std::size_t k = 0; k < f.maps.size(); ++k) {
      const auto& m = decl(f.maps[k]);
      if (m.source != a->objects[k]) c.fail("component '" + m.name + "' does not start at " + a->objects[k]);
      // degree of a->objects[k] located in b, or the zero object outside b's window
      const int degree = (a->homological ? 0 : a->lo) + static_cast<int>(k);
      const int offset = degree - (b->homological ? 0 : b->lo);
      if (offset >= 0 && offset < static_cast<int>(b->objects.size())) {
        if (m.target != b->objects[static_cast<std::size_t>(offset)]) {
          c.fail("component '" + m.name + "' does not end at " + b->objects[static_cast<std::size_t>(offset)]);
        }
      }
    }
    used_.insert(f.name);
    d_.chain_maps.push_back(std::move(f));
  }

  const ComplexDecl* find_complex(const std::string& name) const {
    for (const auto& x : d_.complexes)
      if (x.name == name) return &x;
    return nullptr;
  }

  Document d_;
  bool seen_declaration_ = false;
  std::set<std::string> used_;
};

void write_matrix(std::ostream& out, const IntMatrix& m) {
  out << m.rows() << 'x' << m.cols();
  for (const auto& v : m.row_major()) out << ' ' << v.get_str();
}

}  // namespace

Document parse(std::istream& in) { return Parser().run(in); }

Document parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

Document parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse(in);
}

std::string quote(const std::string& word) {
  const bool plain = !word.empty() && std::none_of(word.begin(), word.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '"' || c == '#' || c == '\\';
  });
  if (plain) return word;
  std::string out = "\"";
  for (char c : word) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string write(const Document& d) {
  std::ostringstream out;
  out << "instance " << (d.instance == Instance::Fgab ? "fgab" : "pointed") << '\n';
  for (const auto& name : d.object_names) {
    out << "object " << name;
    if (d.instance == Instance::Pointed) {
      out << " size " << d.sets.at(name).size;
    } else {
      const auto& g = d.groups.at(name);
      out << " gens " << g.generators();
      if (g.relations().cols() > 0) {
        out << " relations ";
        write_matrix(out, g.relations());
      }
    }
    out << '\n';
  }
  for (const auto& m : d.morphisms) {
    out << "morphism " << m.name << " : " << m.source << " -> " << m.target << ' ';
    if (d.instance == Instance::Pointed) {
      out << "table";
      for (auto y : d.maps.at(m.name).table) out << ' ' << y;
    } else {
      write_matrix(out, d.homs.at(m.name).matrix());
    }
    out << '\n';
  }
  for (const auto& x : d.complexes) {
    out << "complex " << x.name << (x.homological ? " homological" : " cohomological " + std::to_string(x.lo))
        << " objects";
    for (const auto& o : x.objects) out << ' ' << o;
    if (!x.maps.empty()) {
      out << " maps";
      for (const auto& m : x.maps) out << ' ' << m;
    }
    out << '\n';
  }
  for (const auto& f : d.chain_maps) {
    out << "chainmap " << f.name << " : " << f.source << " -> " << f.target << " maps";
    for (const auto& m : f.maps) out << ' ' << m;
    out << '\n';
  }
  auto statements = [&](const char* verb, const std::vector<Statement>& list) {
    for (const auto& s : list) {
      out << verb;
      for (const auto& w : s.words) out << ' ' << quote(w);
      out << '\n';
    }
  };
  statements("command", d.commands);
  statements("result", d.results);
  return out.str();
}

}  // namespace wex::cli
