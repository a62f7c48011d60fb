// afinst - instantiate abstract argumentation frameworks from a
// propositional knowledge base and a claim set.
//
// Subcommands:
//   arguments    enumerate arguments, print flattened as/3 facts
//   attacks      compute attack facts for one attack type
//   framework    assemble the AF and print it in apx
//   extensions   evaluate stable / conflict-free sets
//   export       full pipeline with format selection (apx|dot|json|facts)

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "afinst/io.hpp"

namespace {

using namespace afinst;

struct CommonOpts {
  std::string kb_path;
  std::string claims_path;
  std::string out_path;  // empty = stdout
  int atom_cap = kDefaultAtomCap;
  std::size_t kb_cap = kDefaultKbCap;
  int extension_cap = kDefaultExtensionCap;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--kb", o.kb_path, "knowledge base file")->required();
  cmd->add_option("--claims", o.claims_path, "claim set file")->required();
  cmd->add_option("--out", o.out_path, "output file (default: stdout)");
  cmd->add_option("--atom-cap", o.atom_cap, "max distinct atoms per check");
  cmd->add_option("--kb-cap", o.kb_cap, "max knowledge base size for subset enumeration");
  cmd->add_option("--extension-cap", o.extension_cap, "max arguments for extension search");
}

ProblemInstance load(const CommonOpts& o) {
  Config cfg{o.atom_cap, o.kb_cap, o.extension_cap};
  ProblemInstance inst = load_instance(o.kb_path, o.claims_path, cfg);
  for (const auto& w : inst.warnings) std::cerr << "warning: " << w << "\n";
  return inst;
}

void write_out(const CommonOpts& o, const std::string& text) {
  if (o.out_path.empty())
    std::cout << text;
  else
    atomic_write(o.out_path, text);
}

AttackType parse_kind(const std::string& name) {
  if (name == "defeat") return AttackType::Defeat;
  if (name == "direct_defeat") return AttackType::DirectDefeat;
  throw CLI::ValidationError("--type", "expected 'defeat' or 'direct_defeat'");
}

std::string format_extensions(const std::vector<Extension>& exts) {
  std::string out;
  for (const auto& ext : exts) {
    out += "{";
    for (std::size_t i = 0; i < ext.size(); ++i) {
      if (i) out += ",";
      out += "a" + std::to_string(ext[i]);
    }
    out += "}\n";
  }
  return out;
}

std::string format_attack_facts(const std::vector<Attack>& attacks) {
  std::string out;
  for (const Attack& a : attacks)
    out += "attack(" + std::to_string(a.from) + "," + std::to_string(a.to) + ").\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"instantiation-based argumentation framework generator"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string type_name = "direct_defeat";
  std::string semantics_name = "stable";
  std::string format_name = "apx";
  bool dot_labels = false;

  auto* cmd_arguments = app.add_subcommand("arguments", "enumerate arguments as flat facts");
  add_common(cmd_arguments, opts);

  auto* cmd_attacks = app.add_subcommand("attacks", "compute attacks for one attack type");
  add_common(cmd_attacks, opts);
  cmd_attacks->add_option("--type", type_name, "defeat|direct_defeat");

  auto* cmd_framework = app.add_subcommand("framework", "assemble the AF, print apx");
  add_common(cmd_framework, opts);
  cmd_framework->add_option("--type", type_name, "defeat|direct_defeat");

  auto* cmd_extensions = app.add_subcommand("extensions", "evaluate AF semantics");
  add_common(cmd_extensions, opts);
  cmd_extensions->add_option("--type", type_name, "defeat|direct_defeat");
  cmd_extensions->add_option("--semantics", semantics_name, "stable|conflict_free");

  auto* cmd_export = app.add_subcommand("export", "run the pipeline, export one format");
  add_common(cmd_export, opts);
  cmd_export->add_option("--type", type_name, "defeat|direct_defeat");
  cmd_export->add_option("--format", format_name, "apx|dot|json|facts");
  cmd_export->add_flag("--labels", dot_labels, "label DOT nodes with claim and support");

  CLI11_PARSE(app, argc, argv);

  try {
    ProblemInstance inst = load(opts);
    AttackType kind = parse_kind(type_name);

    if (cmd_arguments->parsed()) {
      auto args = enumerate_arguments(inst.kb, inst.claims,
                                      InstantiationConfig{opts.atom_cap, opts.kb_cap});
      write_out(opts, emit_flat_facts(args, inst.kb, inst.claims));
      return 0;
    }
    if (cmd_attacks->parsed()) {
      PipelineResult r = run_pipeline(inst, {kind}, kind, false);
      write_out(opts, format_attack_facts(r.attacks));
      return 0;
    }
    if (cmd_framework->parsed()) {
      PipelineResult r = run_pipeline(inst, {kind}, kind, false);
      write_out(opts, export_apx(r.af));
      return 0;
    }
    if (cmd_extensions->parsed()) {
      PipelineResult r = run_pipeline(inst, {kind}, kind, false);
      std::vector<Extension> exts;
      if (semantics_name == "stable")
        exts = stable_extensions(r.af, opts.extension_cap);
      else if (semantics_name == "conflict_free")
        exts = conflict_free_sets(r.af, opts.extension_cap);
      else
        throw IoError("unknown semantics '" + semantics_name + "'");
      write_out(opts, format_extensions(exts));
      return 0;
    }
    if (cmd_export->parsed()) {
      PipelineResult r = run_pipeline(inst, {kind}, kind, false);
      std::string text;
      if (format_name == "apx")
        text = export_apx(r.af);
      else if (format_name == "dot")
        text = dot_labels ? export_dot(r.af, r.args, inst.kb, inst.claims) : export_dot(r.af);
      else if (format_name == "json")
        text = export_json(r.args, r.attacks, inst.kb, inst.claims);
      else if (format_name == "facts")
        text = emit_flat_facts(r.args, inst.kb, inst.claims);
      else
        throw IoError("unknown format '" + format_name + "'");
      write_out(opts, text);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
