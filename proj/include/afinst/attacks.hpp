#ifndef AFINST_ATTACKS_HPP
#define AFINST_ATTACKS_HPP

// Typed attack relations between arguments: defeat (the attacker's claim
// entails the negation of the whole support conjunction) and direct
// defeat (it entails the negation of some single support member).

#include <algorithm>
#include <string>
#include <vector>

#include "afinst/formula.hpp"
#include "afinst/instantiate.hpp"
#include "afinst/logic.hpp"

namespace afinst {

enum class AttackType { Defeat, DirectDefeat };

inline const char* attack_type_name(AttackType t) {
  return t == AttackType::Defeat ? "defeat" : "direct_defeat";
}

struct Attack {
  int from = 0;
  int to = 0;
  AttackType kind = AttackType::Defeat;

  friend bool operator==(const Attack& a, const Attack& b) {
    return a.from == b.from && a.to == b.to && a.kind == b.kind;
  }
};

// Left-associated conjunction of the support members in ascending KB-index
// order; a singleton support is returned unchanged.
inline Formula support_conjunction(const Argument& arg, const KnowledgeBase& kb) {
  auto indices = support_indices(arg.support);
  if (indices.empty()) throw std::invalid_argument("argument has an empty support");
  Formula acc = kb.at(indices[0]);
  for (std::size_t i = 1; i < indices.size(); ++i) acc = Formula::conj(acc, kb.at(indices[i]));
  return acc;
}

inline bool attacks_between(const Argument& attacker, const Argument& target, AttackType kind,
                            const KnowledgeBase& kb, const ClaimSet& cs,
                            int atom_cap = kDefaultAtomCap) {
  FormulaSet claim_set;
  claim_set.add(cs.at(attacker.claim));
  if (kind == AttackType::Defeat)
    return entails(claim_set, Formula::neg(support_conjunction(target, kb)), atom_cap);
  for (std::size_t i : support_indices(target.support))
    if (entails(claim_set, Formula::neg(kb.at(i)), atom_cap)) return true;
  return false;
}

// Tests every ordered pair including X = Y; for consistent supports the
// self-attack case can never hold, so no pair is excluded up front.
inline std::vector<Attack> compute_attacks(const std::vector<Argument>& args,
                                           const std::vector<AttackType>& kinds,
                                           const KnowledgeBase& kb, const ClaimSet& cs,
                                           int atom_cap = kDefaultAtomCap) {
  std::vector<Attack> out;
  for (AttackType kind : kinds)
    for (const Argument& x : args)
      for (const Argument& y : args)
        if (attacks_between(x, y, kind, kb, cs, atom_cap)) out.push_back(Attack{x.id, y.id, kind});
  std::sort(out.begin(), out.end(), [](const Attack& a, const Attack& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.from != b.from) return a.from < b.from;
    return a.to < b.to;
  });
  return out;
}

}  // namespace afinst

#endif  // AFINST_ATTACKS_HPP
