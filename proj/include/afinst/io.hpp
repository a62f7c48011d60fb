#ifndef AFINST_IO_HPP
#define AFINST_IO_HPP

// Instance loading (fact-style and plain-style files), flattened-fact
// interchange, apx/DOT/JSON export and the end-to-end pipeline.

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "afinst/attacks.hpp"
#include "afinst/formula.hpp"
#include "afinst/instantiate.hpp"
#include "afinst/semantics.hpp"

namespace afinst {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Config {
  int atom_cap = kDefaultAtomCap;
  std::size_t kb_cap = kDefaultKbCap;
  int extension_cap = kDefaultExtensionCap;
};

struct ProblemInstance {
  KnowledgeBase kb;
  ClaimSet claims;
  std::string kb_path;
  std::string claims_path;
  Config config;
  std::vector<std::string> warnings;  // dropped duplicates etc.
};

namespace detail {

inline bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;
}

inline std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Matches `<pred>(<term>).` and returns pred + term text.
inline std::optional<std::pair<std::string, std::string>> match_fact(const std::string& line) {
  std::string t = strip(line);
  if (t.size() < 4 || t.back() != '.') return std::nullopt;
  std::size_t open = t.find('(');
  if (open == std::string::npos) return std::nullopt;
  std::string pred = t.substr(0, open);
  if (t[t.size() - 2] != ')') return std::nullopt;
  std::string term = t.substr(open + 1, t.size() - open - 3);
  return std::make_pair(pred, term);
}

struct LoadedFile {
  std::vector<std::pair<int, Formula>> formulas;  // (line number, formula)
};

// Auto-detects fact style (`kb(<term>).` / `cl(<term>).` lines) versus
// plain style (one formula per line, # comments). `expected_pred` is the
// predicate this file must use in fact style.
inline LoadedFile load_formula_file(const std::string& path, const std::string& expected_pred) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::vector<std::pair<int, std::string>> lines;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!blank_or_comment(line)) lines.emplace_back(lineno, strip(line));
  }
  bool fact_style = !lines.empty() && match_fact(lines.front().second).has_value();
  LoadedFile out;
  for (const auto& [no, text] : lines) {
    std::string formula_text = text;
    if (fact_style) {
      auto fact = match_fact(text);
      if (!fact) throw IoError(path + ":" + std::to_string(no) + ": malformed fact line");
      if (fact->first != expected_pred)
        throw IoError(path + ":" + std::to_string(no) + ": predicate '" + fact->first +
                      "' not allowed here (expected '" + expected_pred + "')");
      formula_text = fact->second;
    }
    try {
      out.formulas.emplace_back(no, parse_formula(formula_text));
    } catch (const ParseError& e) {
      throw IoError(path + ":" + std::to_string(no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace detail

inline ProblemInstance load_instance(const std::string& kb_path, const std::string& claims_path,
                                     const Config& config = {}) {
  ProblemInstance inst;
  inst.kb_path = kb_path;
  inst.claims_path = claims_path;
  inst.config = config;
  for (const auto& [no, f] : detail::load_formula_file(kb_path, "kb").formulas)
    if (!inst.kb.add(f))
      inst.warnings.push_back(kb_path + ":" + std::to_string(no) + ": duplicate kb formula '" +
                              print_formula(f) + "' dropped");
  for (const auto& [no, f] : detail::load_formula_file(claims_path, "cl").formulas)
    if (!inst.claims.add(f))
      inst.warnings.push_back(claims_path + ":" + std::to_string(no) + ": duplicate claim '" +
                              print_formula(f) + "' dropped");
  if (inst.kb.empty())
    throw IoError(kb_path + ": knowledge base is empty (supports must be nonempty)");
  return inst;
}

// Flattened interchange facts: `as(<id>,<fs|sclaim>,<term>).`, fs lines
// in ascending KB-index order before the single sclaim line per argument.
inline std::string emit_flat_facts(const std::vector<Argument>& args, const KnowledgeBase& kb,
                                   const ClaimSet& cs) {
  std::string out;
  for (const Argument& a : args) {
    for (std::size_t i : support_indices(a.support))
      out += "as(" + std::to_string(a.id) + ",fs," + print_formula(kb.at(i)) + ").\n";
    out += "as(" + std::to_string(a.id) + ",sclaim," + print_formula(cs.at(a.claim)) + ").\n";
  }
  return out;
}

struct FlatArgument {
  int id = 0;
  std::vector<Formula> support;
  Formula claim = Formula::atom("uninitialized");
  bool has_claim = false;
};

inline std::vector<FlatArgument> parse_flat_facts(const std::string& text) {
  std::map<int, FlatArgument> by_id;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::blank_or_comment(line)) continue;
    auto fact = detail::match_fact(line);
    if (!fact || fact->first != "as")
      throw IoError("flat facts line " + std::to_string(lineno) + ": expected as(...) fact");
    // split `<id>,<field>,<term>` on the first two commas
    const std::string& body = fact->second;
    std::size_t c1 = body.find(',');
    std::size_t c2 = body.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw IoError("flat facts line " + std::to_string(lineno) + ": expected as(id,field,term)");
    int id = 0;
    try {
      id = std::stoi(detail::strip(body.substr(0, c1)));
    } catch (const std::exception&) {
      throw IoError("flat facts line " + std::to_string(lineno) + ": bad argument id");
    }
    std::string field = detail::strip(body.substr(c1 + 1, c2 - c1 - 1));
    Formula f = parse_formula(body.substr(c2 + 1));
    FlatArgument& fa = by_id[id];
    fa.id = id;
    if (field == "fs") {
      fa.support.push_back(f);
    } else if (field == "sclaim") {
      if (fa.has_claim)
        throw IoError("flat facts: argument " + std::to_string(id) + " has two sclaim facts");
      fa.claim = f;
      fa.has_claim = true;
    } else {
      throw IoError("flat facts line " + std::to_string(lineno) + ": unknown field '" + field + "'");
    }
  }
  std::vector<FlatArgument> out;
  for (auto& [id, fa] : by_id) {
    if (!fa.has_claim)
      throw IoError("flat facts: argument " + std::to_string(id) + " has no sclaim fact");
    if (fa.support.empty())
      throw IoError("flat facts: argument " + std::to_string(id) + " has no fs facts");
    out.push_back(std::move(fa));
  }
  return out;
}

// Maps flat arguments back onto KB / claim-set indices.
inline std::vector<Argument> resolve_flat_facts(const std::vector<FlatArgument>& flat,
                                                const KnowledgeBase& kb, const ClaimSet& cs) {
  auto kb_index = [&](const Formula& f) -> std::size_t {
    for (std::size_t i = 0; i < kb.size(); ++i)
      if (kb.at(i) == f) return i;
    throw IoError("flat facts: support formula '" + print_formula(f) + "' not in knowledge base");
  };
  std::vector<Argument> out;
  for (const FlatArgument& fa : flat) {
    Argument a;
    a.id = fa.id;
    for (const Formula& f : fa.support) a.support |= SupportMask{1} << kb_index(f);
    a.claim = -1;
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (cs.at(i) == fa.claim) a.claim = static_cast<int>(i);
    if (a.claim < 0)
      throw IoError("flat facts: claim '" + print_formula(fa.claim) + "' not in claim set");
    out.push_back(a);
  }
  return out;
}

inline std::string export_apx(const ArgumentationFramework& af) {
  std::string out;
  for (int i = 1; i <= af.n; ++i) out += "arg(a" + std::to_string(i) + ").\n";
  auto edges = af.att;
  std::sort(edges.begin(), edges.end());
  for (auto [from, to] : edges)
    out += "att(a" + std::to_string(from) + ",a" + std::to_string(to) + ").\n";
  return out;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

// Plain DOT export, nodes labeled a<i>.
inline std::string export_dot(const ArgumentationFramework& af) {
  std::string out = "digraph af {\n";
  for (int i = 1; i <= af.n; ++i)
    out += "  a" + std::to_string(i) + " [label=\"a" + std::to_string(i) + "\"];\n";
  auto edges = af.att;
  std::sort(edges.begin(), edges.end());
  for (auto [from, to] : edges)
    out += "  a" + std::to_string(from) + " -> a" + std::to_string(to) + ";\n";
  out += "}\n";
  return out;
}

// Labeled DOT export: node label "a<i>: <claim> ⊢ {<support>}".
inline std::string export_dot(const ArgumentationFramework& af, const std::vector<Argument>& args,
                              const KnowledgeBase& kb, const ClaimSet& cs) {
  std::map<int, const Argument*> by_id;
  for (const Argument& a : args) by_id[a.id] = &a;
  std::string out = "digraph af {\n";
  for (int i = 1; i <= af.n; ++i) {
    std::string label = "a" + std::to_string(i);
    auto it = by_id.find(i);
    if (it != by_id.end()) {
      const Argument& a = *it->second;
      label += ": " + print_formula(cs.at(a.claim)) + " ⊢ {";
      bool first = true;
      for (std::size_t k : support_indices(a.support)) {
        if (!first) label += ", ";
        label += print_formula(kb.at(k));
        first = false;
      }
      label += "}";
    }
    out += "  a" + std::to_string(i) + " [label=\"" + detail::dot_escape(label) + "\"];\n";
  }
  auto edges = af.att;
  std::sort(edges.begin(), edges.end());
  for (auto [from, to] : edges)
    out += "  a" + std::to_string(from) + " -> a" + std::to_string(to) + ";\n";
  out += "}\n";
  return out;
}

inline std::string export_json(const std::vector<Argument>& args, const std::vector<Attack>& attacks,
                               const KnowledgeBase& kb, const ClaimSet& cs) {
  nlohmann::ordered_json doc;
  doc["arguments"] = nlohmann::ordered_json::array();
  for (const Argument& a : args) {
    nlohmann::ordered_json ja;
    ja["id"] = a.id;
    ja["support"] = nlohmann::ordered_json::array();
    for (std::size_t i : support_indices(a.support)) ja["support"].push_back(print_formula(kb.at(i)));
    ja["claim"] = print_formula(cs.at(a.claim));
    doc["arguments"].push_back(std::move(ja));
  }
  doc["attacks"] = nlohmann::ordered_json::array();
  for (const Attack& a : attacks) {
    nlohmann::ordered_json je;
    je["from"] = a.from;
    je["to"] = a.to;
    je["kind"] = attack_type_name(a.kind);
    doc["attacks"].push_back(std::move(je));
  }
  return doc.dump(2) + "\n";
}

struct ImportedFramework {
  std::vector<Argument> args;
  std::vector<Attack> attacks;
};

inline ImportedFramework import_json(const std::string& text, const KnowledgeBase& kb,
                                     const ClaimSet& cs) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("json import: ") + e.what());
  }
  ImportedFramework out;
  std::vector<FlatArgument> flat;
  for (const auto& ja : doc.at("arguments")) {
    FlatArgument fa;
    fa.id = ja.at("id").get<int>();
    for (const auto& s : ja.at("support")) fa.support.push_back(parse_formula(s.get<std::string>()));
    fa.claim = parse_formula(ja.at("claim").get<std::string>());
    fa.has_claim = true;
    flat.push_back(std::move(fa));
  }
  out.args = resolve_flat_facts(flat, kb, cs);
  for (const auto& je : doc.at("attacks")) {
    Attack a;
    a.from = je.at("from").get<int>();
    a.to = je.at("to").get<int>();
    std::string kind = je.at("kind").get<std::string>();
    if (kind == "defeat") a.kind = AttackType::Defeat;
    else if (kind == "direct_defeat") a.kind = AttackType::DirectDefeat;
    else throw IoError("json import: unknown attack kind '" + kind + "'");
    out.attacks.push_back(a);
  }
  return out;
}

// write-temp-then-rename so readers never see a partial file
inline void atomic_write(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("cannot write '" + tmp + "'");
    out << content;
    if (!out) throw IoError("write failed for '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
}

struct PipelineResult {
  std::vector<Argument> args;
  std::vector<Attack> attacks;
  ArgumentationFramework af;
  std::vector<Extension> stable;
};

// Steps: enumerate arguments, flatten, compute attacks, assemble the AF
// over the selected kind, optionally evaluate stable extensions.
inline PipelineResult run_pipeline(const ProblemInstance& inst, const std::vector<AttackType>& kinds,
                                   AttackType framework_kind, bool want_stable) {
  PipelineResult r;
  try {
    r.args = enumerate_arguments(inst.kb, inst.claims,
                                 InstantiationConfig{inst.config.atom_cap, inst.config.kb_cap});
  } catch (const std::exception& e) {
    throw IoError(std::string("argument enumeration: ") + e.what());
  }
  try {
    r.attacks = compute_attacks(r.args, kinds, inst.kb, inst.claims, inst.config.atom_cap);
  } catch (const std::exception& e) {
    throw IoError(std::string("attack computation: ") + e.what());
  }
  r.af = ArgumentationFramework::from_attacks(static_cast<int>(r.args.size()), r.attacks,
                                              framework_kind);
  if (want_stable) {
    try {
      r.stable = stable_extensions(r.af, inst.config.extension_cap);
    } catch (const std::exception& e) {
      throw IoError(std::string("semantics evaluation: ") + e.what());
    }
  }
  return r;
}

}  // namespace afinst

#endif  // AFINST_IO_HPP
