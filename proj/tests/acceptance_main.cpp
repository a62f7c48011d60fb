// Acceptance suite: runs every criterion, prints one pass/fail line per
// criterion, exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "afinst/attacks.hpp"
#include "afinst/instantiate.hpp"
#include "afinst/io.hpp"
#include "afinst/semantics.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace afinst;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. The running example yields exactly the six expected (support, claim)
//    pairs, in under a second.
void criterion1() {
  auto start = std::chrono::steady_clock::now();
  KnowledgeBase kb = fixtures::example_kb();
  ClaimSet cs = fixtures::example_claims();
  auto args = enumerate_arguments(kb, cs);
  bool ok = args.size() == 6;
  if (ok) {
    std::set<int> labels;
    try {
      for (const Argument& a : args) labels.insert(fixtures::example_label(a, kb, cs));
    } catch (const std::exception&) {
      ok = false;
    }
    ok = ok && labels == std::set<int>{1, 2, 3, 4, 5, 6};
  }
  double t = seconds_since(start);
  ok = ok && t < 1.0;
  report(1, "running-example arguments", ok,
         std::to_string(args.size()) + " arguments in " + std::to_string(t) + "s");
}

// 2. Direct defeat yields exactly the nine expected edges under the
//    content-based label mapping.
void criterion2() {
  auto start = std::chrono::steady_clock::now();
  KnowledgeBase kb = fixtures::example_kb();
  ClaimSet cs = fixtures::example_claims();
  auto args = enumerate_arguments(kb, cs);
  auto attacks = compute_attacks(args, {AttackType::DirectDefeat}, kb, cs);
  std::map<int, int> to_label;
  for (const Argument& a : args) to_label[a.id] = fixtures::example_label(a, kb, cs);
  std::set<std::pair<int, int>> got;
  for (const Attack& a : attacks) got.insert({to_label[a.from], to_label[a.to]});
  std::set<std::pair<int, int>> expected = {{4, 1}, {6, 2}, {4, 3}, {6, 4}, {3, 5},
                                            {3, 4}, {6, 3}, {4, 6}, {3, 6}};
  double t = seconds_since(start);
  bool ok = got == expected && t < 1.0;
  report(2, "running-example direct-defeat attacks", ok,
         std::to_string(got.size()) + " edges in " + std::to_string(t) + "s");
}

// 3. Stable extensions of that AF are exactly {1,5,6},{1,2,3},{2,4,5} in
//    label space.
void criterion3() {
  auto start = std::chrono::steady_clock::now();
  KnowledgeBase kb = fixtures::example_kb();
  ClaimSet cs = fixtures::example_claims();
  auto args = enumerate_arguments(kb, cs);
  auto attacks = compute_attacks(args, {AttackType::DirectDefeat}, kb, cs);
  auto af = ArgumentationFramework::from_attacks(static_cast<int>(args.size()), attacks,
                                                 AttackType::DirectDefeat);
  std::map<int, int> to_label;
  for (const Argument& a : args) to_label[a.id] = fixtures::example_label(a, kb, cs);
  std::set<std::set<int>> got;
  for (const Extension& e : stable_extensions(af)) {
    std::set<int> labels;
    for (int id : e) labels.insert(to_label[id]);
    got.insert(labels);
  }
  std::set<std::set<int>> expected = {{1, 5, 6}, {1, 2, 3}, {2, 4, 5}};
  double t = seconds_since(start);
  bool ok = got == expected && t < 1.0;
  report(3, "running-example stable extensions", ok,
         std::to_string(got.size()) + " extensions in " + std::to_string(t) + "s");
}

// 4. ({!b},!b) does not directly defeat ({a,a->b},b) but does defeat it;
//    cross-checked against the truth-table oracle.
void criterion4() {
  KnowledgeBase kb = fixtures::example_kb();
  ClaimSet cs = fixtures::example_claims();
  auto args = enumerate_arguments(kb, cs);
  Argument a5 = fixtures::example_argument(args, 5, kb, cs);
  Argument a3 = fixtures::example_argument(args, 3, kb, cs);
  bool direct = attacks_between(a5, a3, AttackType::DirectDefeat, kb, cs);
  bool defeat = attacks_between(a5, a3, AttackType::Defeat, kb, cs);
  std::vector<Formula> claim = {cs.at(a5.claim)};
  bool oracle_defeat = oracles::entails(claim, Formula::neg(support_conjunction(a3, kb)));
  bool oracle_direct = false;
  for (std::size_t i : support_indices(a3.support))
    if (oracles::entails(claim, Formula::neg(kb.at(i)))) oracle_direct = true;
  bool ok = !direct && defeat && oracle_defeat && !oracle_direct;
  report(4, "defeat without direct defeat between a5 and a3", ok);
}

// 5. >= 500 random instances: arguments, entailment and stable semantics
//    all agree with their brute-force oracles, in under 60 s total.
void criterion5() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(123456);
  int mismatches = 0;
  const int kInstances = 500;
  for (int trial = 0; trial < kInstances; ++trial) {
    auto inst = oracles::random_instance(rng, 4, 6, 5);

    auto args = enumerate_arguments(inst.kb, inst.claims);
    std::vector<std::pair<SupportMask, int>> got;
    for (const Argument& a : args) got.emplace_back(a.support, a.claim);
    if (got != oracles::arguments(inst.kb, inst.claims)) ++mismatches;

    std::vector<Formula> premises;
    int np = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int i = 0; i < np; ++i) premises.push_back(oracles::random_formula(rng, 5, 2));
    Formula conclusion = oracles::random_formula(rng, 5, 2);
    if (entails(FormulaSet(premises), conclusion) != oracles::entails(premises, conclusion))
      ++mismatches;

    auto attacks = compute_attacks(args, {AttackType::DirectDefeat}, inst.kb, inst.claims);
    auto af = ArgumentationFramework::from_attacks(static_cast<int>(args.size()), attacks,
                                                   AttackType::DirectDefeat);
    if (af.n <= 12) {
      std::vector<std::set<int>> stable;
      for (const Extension& e : stable_extensions(af)) stable.emplace_back(e.begin(), e.end());
      std::sort(stable.begin(), stable.end());
      auto want = oracles::stable_extensions(af);
      std::sort(want.begin(), want.end());
      if (stable != want) ++mismatches;
    }
  }
  double t = seconds_since(start);
  bool ok = mismatches == 0 && t < 60.0;
  report(5, "oracle equivalence over 500 random instances", ok,
         std::to_string(mismatches) + " mismatches in " + std::to_string(t) + "s");
}

// 6. Structural properties on generated instances: direct defeat is a
//    subset of defeat, no self-attacks, all argument invariants hold.
void criterion6() {
  std::mt19937 rng(654321);
  int violations = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto inst = oracles::random_instance(rng, 4, 6, 5);
    auto args = enumerate_arguments(inst.kb, inst.claims);
    for (const Argument& a : args) {
      if (a.support == 0) ++violations;
      FormulaSet support = support_formulas(inst.kb, a.support);
      if (!is_consistent(support)) ++violations;
      if (!entails(support, inst.claims.at(a.claim))) ++violations;
      if (!is_minimal_support(inst.kb, a.support, inst.claims.at(a.claim))) ++violations;
    }
    auto direct = compute_attacks(args, {AttackType::DirectDefeat}, inst.kb, inst.claims);
    auto defeat = compute_attacks(args, {AttackType::Defeat}, inst.kb, inst.claims);
    std::set<std::pair<int, int>> defeat_edges;
    for (const Attack& a : defeat) {
      defeat_edges.insert({a.from, a.to});
      if (a.from == a.to) ++violations;
    }
    for (const Attack& a : direct) {
      if (a.from == a.to) ++violations;
      if (defeat_edges.count({a.from, a.to}) == 0) ++violations;
    }
  }
  report(6, "structural properties on generated instances", violations == 0,
         std::to_string(violations) + " violations");
}

// 7. Two pipeline runs are byte-identical in every export format, and the
//    flat facts for ({a},a) and ({a,a->b},b) match the documented grammar.
void criterion7() {
  KnowledgeBase kb = fixtures::example_kb();
  ClaimSet cs = fixtures::example_claims();
  bool ok = true;
  std::vector<std::string> first;
  for (int run = 0; run < 2; ++run) {
    auto args = enumerate_arguments(kb, cs);
    auto attacks = compute_attacks(args, {AttackType::DirectDefeat}, kb, cs);
    auto af = ArgumentationFramework::from_attacks(static_cast<int>(args.size()), attacks,
                                                   AttackType::DirectDefeat);
    std::vector<std::string> outputs = {
        export_apx(af),
        export_dot(af, args, kb, cs),
        export_json(args, attacks, kb, cs),
        emit_flat_facts(args, kb, cs),
    };
    if (run == 0)
      first = outputs;
    else if (outputs != first)
      ok = false;
  }
  auto args = enumerate_arguments(kb, cs);
  Argument a1 = fixtures::example_argument(args, 1, kb, cs);
  Argument a3 = fixtures::example_argument(args, 3, kb, cs);
  a1.id = 1;
  a3.id = 3;
  ok = ok && emit_flat_facts({a1}, kb, cs) == "as(1,fs,a).\nas(1,sclaim,a).\n";
  ok = ok && emit_flat_facts({a3}, kb, cs) == "as(3,fs,a).\nas(3,fs,imp(a,b)).\nas(3,sclaim,b).\n";
  report(7, "determinism and format fidelity", ok);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}
