#include "wex/cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "wex/engine/axioms.hpp"
#include "wex/engine/snake.hpp"
#include "wex/fgab/diagrams.hpp"

namespace wex::cli {

using fgab::AbMorphism;
using fgab::FgabCategory;
using fgab::FpAbelianGroup;
using fgab::IntMatrix;
using pointed::PointedMap;
using pointed::PointedSet;
using pointed::PointedSetsCategory;

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out << "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << m(r, c).get_str();
  }
  out << ']';
  return out.str();
}

namespace {

const FgabCategory fgab_cat;

[[noreturn]] void usage(const Statement& s, const std::string& what) { throw ParseError(s.line, what); }

Statement require_command(const Document& d, const std::string& verb) {
  auto s = d.command(verb);
  if (!s) throw ParseError(0, "file has no 'command " + verb + " ...' line");
  return *s;
}

void require_instance(const Document& d, Instance want, const std::string& what) {
  if (d.instance != want) throw Unsupported(what + " needs instance " + (want == Instance::Fgab ? "fgab" : "pointed"));
}

std::string show(const FpAbelianGroup& g) { return g.invariants().to_string(); }
std::string show(const FgabCategory&, const AbMorphism& f) {
  return show(f.source()) + " -> " + show(f.target()) + ", matrix " + format_matrix(f.matrix());
}
std::string show(const PointedSet& s) { return "P" + std::to_string(s.size); }
std::string show(const PointedSetsCategory& cat, const PointedMap& f) { return cat.describe(f); }

void add_object(Document& d, const std::string& name, const FpAbelianGroup& g) { d.add_group(name, g); }
void add_object(Document& d, const std::string& name, const PointedSet& s) { d.add_set(name, s); }
void add_morphism(Document& d, const std::string& name, const std::string& s, const std::string& t,
                  const AbMorphism& f) {
  d.add_hom(name, s, t, f);
}
void add_morphism(Document& d, const std::string& name, const std::string& s, const std::string& t,
                  const PointedMap& f) {
  d.add_map(name, s, t, f);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// Complexes.

std::string degree_name(bool homological, int internal) {
  const int k = homological ? -internal : internal;
  return k < 0 ? "m" + std::to_string(-k) : std::to_string(k);
}

std::string degree_label(bool homological, int internal) {
  return homological ? "H" + std::to_string(-internal) : "H^" + std::to_string(internal);
}

const ComplexDecl& pick_complex(const Document& d, const std::optional<Statement>& s) {
  if (s && s->words.size() >= 2) {
    if (s->words.size() > 2) usage(*s, "homology takes one complex name");
    for (const auto& x : d.complexes)
      if (x.name == s->words[1]) return x;
    usage(*s, "unknown complex '" + s->words[1] + "'");
  }
  if (d.complexes.size() != 1) {
    throw ParseError(0, "file declares " + std::to_string(d.complexes.size()) +
                            " complexes; name one with 'command homology NAME'");
  }
  return d.complexes.front();
}

FpAbelianGroup canonical(const fgab::Invariants& inv) { return FpAbelianGroup::canonical(inv.torsion, inv.free_rank); }

// ---------------------------------------------------------------------------
// Snake, generic over the instance.

template <class C, class Lookup>
Outcome snake_impl(const C& cat, const Document& d, const Statement& s, Lookup lookup, const Options& o) {
  if (s.words.size() != 8) usage(s, "snake takes phi1 phi2 phi1' phi2' f1 f2 f3");
  std::vector<MorphismOf<C>> m;
  for (std::size_t k = 1; k < 8; ++k) m.push_back(lookup(s.words[k]));
  const auto diagram = engine::make_snake_diagram(cat, m[0], m[1], m[2], m[3], m[4], m[5], m[6]);
  const auto r = engine::snake(cat, diagram);

  static const char* objects[] = {"K1", "K2", "K3", "C1", "C2", "C3"};
  static const char* maps[] = {"psi1", "psi2", "delta", "psi1'", "psi2'"};
  static const char* map_names[] = {"psi1", "psi2", "delta", "psi1p", "psi2p"};
  const bool exact = r.exactness.exact && r.psi1_inflation && r.psi2p_deflation;
  Outcome out{exact ? kOk : kAnsweredNo, {}};
  std::ostringstream text;
  if (o.format == Format::Text) {
    for (std::size_t k = 0; k < 6; ++k) {
      const auto obj = k < 5 ? cat.source(r.sequence[k]) : cat.target(r.sequence[4]);
      text << objects[k] << " = " << show(obj) << '\n';
    }
    for (std::size_t k = 0; k < 5; ++k) text << maps[k] << ": " << show(cat, r.sequence[k]) << '\n';
    for (std::size_t k = 0; k < 6; ++k) text << "exact at " << objects[k] << ": " << yes_no(r.exactness.joint_holds[k]) << '\n';
    text << "psi1 inflation: " << yes_no(r.psi1_inflation) << '\n';
    text << "psi2' deflation: " << yes_no(r.psi2p_deflation) << '\n';
    text << "verdict: " << (exact ? "exact" : "not exact") << '\n';
    out.output = text.str();
    return out;
  }
  Document m_out;
  m_out.instance = d.instance;
  for (std::size_t k = 0; k < 6; ++k) add_object(m_out, objects[k], k < 5 ? cat.source(r.sequence[k]) : cat.target(r.sequence[4]));
  for (std::size_t k = 0; k < 5; ++k) add_morphism(m_out, map_names[k], objects[k], objects[k + 1], r.sequence[k]);
  for (std::size_t k = 0; k < 6; ++k)
    m_out.results.push_back({0, {"exact_at", objects[k], yes_no(r.exactness.joint_holds[k])}});
  m_out.results.push_back({0, {"psi1_inflation", yes_no(r.psi1_inflation)}});
  m_out.results.push_back({0, {"psi2p_deflation", yes_no(r.psi2p_deflation)}});
  m_out.results.push_back({0, {"verdict", exact ? "exact" : "not_exact"}});
  out.output = write(m_out);
  return out;
}

// ---------------------------------------------------------------------------
// Verify, generic over the instance.

template <class C, class Lookup>
Outcome verify_impl(const C& cat, const Document& d, const Statement& s, Lookup lookup, const Options& o) {
  if (s.words.size() < 3) usage(s, "verify takes a property and morphism names");
  const std::string& what = s.words[1];
  std::vector<MorphismOf<C>> m;
  for (std::size_t k = 2; k < s.words.size(); ++k) m.push_back(lookup(s.words[k]));
  bool holds = false;
  std::string clause;
  std::vector<bool> joints;
  if (what == "exact") {
    std::vector<AdmissibleFactorization<MorphismOf<C>>> facs;
    for (std::size_t k = 0; k < m.size(); ++k) {
      auto fac = cat.admissible_factorization(m[k]);
      if (!fac) throw HypothesisViolation("morphism not admissible", s.words[k + 2]);
      facs.push_back(*fac);
    }
    const auto r = check_long_exact(cat, m, facs);
    holds = r.exact;
    clause = r.clause;
    joints = r.joint_holds;
  } else if (what == "ses") {
    if (m.size() != 2) usage(s, "verify ses takes i p");
    const auto r = check_short_exact(cat, m[0], m[1]);
    holds = r.holds;
    clause = r.clause;
  } else if (what == "deflation" || what == "inflation" || what == "iso") {
    if (m.size() != 1) usage(s, "verify " + what + " takes one morphism");
    holds = what == "deflation" ? cat.is_deflation(m[0])
            : what == "inflation" ? is_inflation(cat, m[0])
                                  : is_isomorphism(cat, m[0]);
  } else {
    usage(s, "unknown property '" + what + "'");
  }
  Outcome out{holds ? kOk : kAnsweredNo, {}};
  if (o.format == Format::Text) {
    std::ostringstream text;
    for (std::size_t j = 0; j < joints.size(); ++j) text << "exact at object " << j << ": " << yes_no(joints[j]) << '\n';
    text << what << ": " << yes_no(holds);
    if (!holds && !clause.empty()) text << " (" << clause << ")";
    text << '\n';
    out.output = text.str();
    return out;
  }
  Document m_out;
  m_out.instance = d.instance;
  for (std::size_t j = 0; j < joints.size(); ++j)
    m_out.results.push_back({0, {"exact_at", std::to_string(j), yes_no(joints[j])}});
  Statement v{0, {"verify", what, yes_no(holds)}};
  if (!clause.empty()) v.words.push_back(clause);
  m_out.results.push_back(v);
  out.output = write(m_out);
  return out;
}

template <class Map>
auto lookup_in(const Map& table, const Statement& s) {
  return [&table, s](const std::string& name) {
    auto it = table.find(name);
    if (it == table.end()) usage(s, "unknown morphism '" + name + "'");
    return it->second;
  };
}

Outcome report_axioms(const engine::AxiomReport& r, const std::string& header, Instance instance, const Options& o) {
  Outcome out{r.any_fail() ? kAnsweredNo : kOk, {}};
  if (o.format == Format::Text) {
    std::ostringstream text;
    text << header << '\n';
    for (const auto& a : r.axioms) {
      text << "axiom " << a.axiom << ": " << engine::to_string(a.status) << " (" << a.checked << " checked)\n";
      if (!a.counterexample.empty()) text << "  counterexample: " << a.counterexample << '\n';
      if (!a.note.empty()) text << "  note: " << a.note << '\n';
    }
    out.output = text.str();
    return out;
  }
  Document m;
  m.instance = instance;
  m.results.push_back({0, {"setting", header}});
  for (const auto& a : r.axioms) {
    Statement s{0, {"axiom", a.axiom, engine::to_string(a.status), "checked", std::to_string(a.checked)}};
    if (!a.counterexample.empty()) s.words.insert(s.words.end(), {"counterexample", a.counterexample});
    if (!a.note.empty()) s.words.insert(s.words.end(), {"note", a.note});
    m.results.push_back(s);
  }
  out.output = write(m);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

chain::FgabComplex build_complex(const Document& d, const ComplexDecl& x) {
  require_instance(d, Instance::Fgab, "complexes");
  std::vector<FpAbelianGroup> objects;
  std::vector<IntMatrix> maps;
  for (const auto& o : x.objects) objects.push_back(d.groups.at(o));
  for (const auto& m : x.maps) maps.push_back(d.homs.at(m).matrix());
  if (!x.homological) return chain::fgab_complex(x.lo, objects, maps);
  std::reverse(objects.begin(), objects.end());
  std::reverse(maps.begin(), maps.end());
  return chain::fgab_complex(1 - static_cast<int>(objects.size()), objects, maps);
}

chain::FgabChainMap build_chain_map(const Document& d, const ChainMapDecl& f) {
  const auto& a = d.complex(f.source);
  std::vector<AbMorphism> components;
  for (const auto& m : f.maps) components.push_back(d.homs.at(m));
  if (!a.homological) return {a.lo, components};
  std::reverse(components.begin(), components.end());
  return {1 - static_cast<int>(components.size()), components};
}

Outcome cmd_homology(const Document& d, const Options& o) {
  require_instance(d, Instance::Fgab, "homology");
  const auto& decl = pick_complex(d, d.command("homology"));
  Outcome out;
  Document m;
  if (decl.objects.empty()) {
    if (o.format == Format::Text) {
      out.output = "empty complex: all zero\n";
    } else {
      m.results.push_back({0, {"homology", decl.name, "empty"}});
      out.output = write(m);
    }
    return out;
  }
  const auto x = build_complex(d, decl);
  const auto inv = chain::cohomology_invariants(x);
  // report in increasing printed degree
  std::vector<std::pair<int, fgab::Invariants>> rows;
  for (int i = x.lo; i <= x.hi(); ++i) rows.emplace_back(i, inv[static_cast<std::size_t>(i - x.lo)]);
  if (decl.homological) std::reverse(rows.begin(), rows.end());
  if (o.format == Format::Text) {
    std::ostringstream text;
    for (std::size_t k = 0; k < rows.size(); ++k)
      text << (k ? ", " : "") << degree_label(decl.homological, rows[k].first) << " = " << rows[k].second.to_string();
    text << '\n';
    out.output = text.str();
    return out;
  }
  for (const auto& [i, h] : rows) {
    const std::string name = "H" + degree_name(decl.homological, i);
    m.add_group(name, canonical(h));
    m.results.push_back({0, {"homology", decl.name, "degree", std::to_string(decl.homological ? -i : i), "object", name,
                             "invariants", h.to_string()}});
  }
  out.output = write(m);
  return out;
}

Outcome cmd_snake(const Document& d, const Options& o) {
  const Statement s = require_command(d, "snake");
  if (d.instance == Instance::Fgab) return snake_impl(fgab_cat, d, s, lookup_in(d.homs, s), o);
  const PointedSetsCategory cat;
  return snake_impl(cat, d, s, lookup_in(d.maps, s), o);
}

Outcome cmd_verify(const Document& d, const Options& o) {
  const Statement s = require_command(d, "verify");
  if (d.instance == Instance::Fgab) return verify_impl(fgab_cat, d, s, lookup_in(d.homs, s), o);
  const PointedSetsCategory cat;
  return verify_impl(cat, d, s, lookup_in(d.maps, s), o);
}

Outcome cmd_les(const Document& d, const Options& o) {
  require_instance(d, Instance::Fgab, "les");
  const Statement s = require_command(d, "les");
  if (s.words.size() != 3) usage(s, "les takes two chain maps u v");
  const auto& u = d.chain_map(s.words[1]);
  const auto& v = d.chain_map(s.words[2]);
  if (u.target != v.source) usage(s, "u must end where v starts");
  const auto& da = d.complex(u.source);
  const auto& da1 = d.complex(u.target);
  const auto& da2 = d.complex(v.target);
  const auto les = chain::les_of_complexes(fgab_cat, build_complex(d, da), build_complex(d, da1), build_complex(d, da2),
                                           build_chain_map(d, u), build_chain_map(d, v));
  const bool homological = da.homological;
  const std::string names[3] = {da.name, da1.name, da2.name};
  auto label = [&](std::size_t k) {
    const int i = les.first_degree + static_cast<int>(k / 3);
    return degree_label(homological, i) + "(" + names[k % 3] + ")";
  };
  Outcome out{les.exactness.exact ? kOk : kAnsweredNo, {}};
  if (o.format == Format::Text) {
    std::ostringstream text;
    for (std::size_t k = 0; k < les.objects.size(); ++k) {
      text << label(k) << " = " << show(les.objects[k]) << '\n';
      if (k < les.maps.size()) text << "  | " << format_matrix(les.maps[k].matrix()) << '\n';
    }
    text << "verdict: " << (les.exactness.exact ? "exact" : "not exact (" + les.exactness.clause + ")") << '\n';
    out.output = text.str();
    return out;
  }
  Document m;
  for (std::size_t k = 0; k < les.objects.size(); ++k) m.add_group("L" + std::to_string(k), les.objects[k]);
  for (std::size_t k = 0; k < les.maps.size(); ++k)
    m.add_hom("l" + std::to_string(k), "L" + std::to_string(k), "L" + std::to_string(k + 1), les.maps[k]);
  for (std::size_t k = 0; k < les.objects.size(); ++k) m.results.push_back({0, {"term", "L" + std::to_string(k), label(k)}});
  m.results.push_back({0, {"verdict", les.exactness.exact ? "exact" : "not_exact"}});
  out.output = write(m);
  return out;
}

Outcome cmd_axioms(const Options& o) {
  if (o.instance == "pointed-sets" || o.instance == "pointed") {
    pointed::DeflationClass cls = pointed::DeflationClass::Collapse;
    if (o.deflations == "all-surjections") {
      cls = pointed::DeflationClass::AllSurjections;
    } else if (o.deflations != "collapse") {
      throw Unsupported("unknown deflation class '" + o.deflations + "'");
    }
    const PointedSetsCategory cat(cls);
    engine::ExhaustiveOptions opts;
    opts.max_size = o.max_size;
    if (o.budget) opts.budget = *o.budget;
    const auto r = engine::verify_axioms_exhaustive(cat, opts);
    return report_axioms(r,
                         "pointed-sets, deflations " + o.deflations + ", exhaustive over sizes <= " +
                             std::to_string(o.max_size),
                         Instance::Pointed, o);
  }
  if (o.instance == "fgab") {
    if (o.deflations != "collapse") throw Unsupported("--deflations applies to pointed-sets only");
    fgab::FgabDiagramSampler sampler(o.seed);
    engine::RandomizedOptions opts;
    opts.samples = o.budget.value_or(500);
    const auto r = engine::verify_axioms_randomized(fgab_cat, sampler, opts);
    return report_axioms(r,
                         "fgab, randomized, " + std::to_string(opts.samples) + " samples per axiom, seed " +
                             std::to_string(o.seed),
                         Instance::Fgab, o);
  }
  throw Unsupported("unknown instance '" + o.instance + "' (expected pointed-sets or fgab)");
}

Outcome run(const std::string& subcommand, const std::optional<std::string>& path, const Options& o) {
  try {
    if (subcommand == "axioms") return cmd_axioms(o);
    static const std::map<std::string, std::function<Outcome(const Document&, const Options&)>> file_commands = {
        {"homology", cmd_homology}, {"snake", cmd_snake}, {"les", cmd_les}, {"verify", cmd_verify}};
    const auto it = file_commands.find(subcommand);
    if (it == file_commands.end()) return {kInputError, "error: unknown subcommand '" + subcommand + "'\n"};
    if (!path) return {kInputError, "error: " + subcommand + " needs an input file\n"};
    try {
      return it->second(parse_file(*path), o);
    } catch (const ParseError& e) {
      return {kInputError, "error: " + *path + ": " + e.what() + "\n"};
    }
  } catch (const HypothesisViolation& e) {
    return {kHypothesisViolation, std::string("error: hypothesis violated: ") + e.what() + "\n"};
  } catch (const ConclusionFailure& e) {
    return {kAnsweredNo, std::string("error: conclusion failed: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {kInputError, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace wex::cli
