#ifndef AFINST_TESTS_FIXTURES_HPP
#define AFINST_TESTS_FIXTURES_HPP

// Shared running example: KB = {a, a->b, !b}, claims = KB + {!a, b, a&!b}.
// Labels a1..a6 refer to the six arguments by content:
//   a1=({a},a) a2=({a->b},a->b) a3=({a,a->b},b)
//   a4=({!b,a->b},!a) a5=({!b},!b) a6=({a,!b},a&!b)

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "afinst/attacks.hpp"
#include "afinst/instantiate.hpp"
#include "afinst/semantics.hpp"

namespace fixtures {

using namespace afinst;

inline KnowledgeBase example_kb() {
  KnowledgeBase kb;
  kb.add(parse_formula("a"));
  kb.add(parse_formula("imp(a,b)"));
  kb.add(parse_formula("neg(b)"));
  return kb;
}

inline ClaimSet example_claims() {
  ClaimSet cs;
  cs.add(parse_formula("a"));
  cs.add(parse_formula("imp(a,b)"));
  cs.add(parse_formula("neg(b)"));
  cs.add(parse_formula("neg(a)"));
  cs.add(parse_formula("b"));
  cs.add(parse_formula("and(a,neg(b))"));
  return cs;
}

// Maps an enumerated argument to its label 1..6 by (support, claim) content.
inline int example_label(const Argument& arg, const KnowledgeBase& kb, const ClaimSet& cs) {
  struct Entry {
    std::vector<std::string> support;
    std::string claim;
  };
  static const std::vector<Entry> table = {
      {{"a"}, "a"},
      {{"imp(a,b)"}, "imp(a,b)"},
      {{"a", "imp(a,b)"}, "b"},
      {{"neg(b)", "imp(a,b)"}, "neg(a)"},
      {{"neg(b)"}, "neg(b)"},
      {{"a", "neg(b)"}, "and(a,neg(b))"},
  };
  std::vector<std::string> support;
  for (std::size_t i : support_indices(arg.support)) support.push_back(print_formula(kb.at(i)));
  std::string claim = print_formula(cs.at(arg.claim));
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k].claim != claim) continue;
    std::vector<std::string> expect = table[k].support;
    std::sort(expect.begin(), expect.end());
    std::vector<std::string> got = support;
    std::sort(got.begin(), got.end());
    if (expect == got) return static_cast<int>(k + 1);
  }
  throw std::logic_error("argument is not one of the six expected ones");
}

// Looks up the enumerated argument carrying example label `label`.
inline Argument example_argument(const std::vector<Argument>& args, int label,
                                 const KnowledgeBase& kb, const ClaimSet& cs) {
  for (const Argument& a : args)
    if (example_label(a, kb, cs) == label) return a;
  throw std::logic_error("missing argument for label " + std::to_string(label));
}

// The direct-defeat AF over labels 1..6.
inline ArgumentationFramework example_af() {
  ArgumentationFramework af;
  af.n = 6;
  af.att = {{4, 1}, {6, 2}, {4, 3}, {6, 4}, {3, 5}, {3, 4}, {6, 3}, {4, 6}, {3, 6}};
  return af;
}

}  // namespace fixtures

#endif  // AFINST_TESTS_FIXTURES_HPP
