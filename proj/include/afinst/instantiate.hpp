#ifndef AFINST_INSTANTIATE_HPP
#define AFINST_INSTANTIATE_HPP

// Argument enumeration: all pairs (S, C) with S a nonempty, consistent,
// subset-minimal subset of the knowledge base entailing claim C.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "afinst/formula.hpp"
#include "afinst/logic.hpp"

namespace afinst {

using SupportMask = std::uint32_t;

inline constexpr std::size_t kDefaultKbCap = 30;

class KbCapError : public std::runtime_error {
public:
  KbCapError(std::size_t size, std::size_t cap)
      : std::runtime_error("knowledge base has " + std::to_string(size) +
                           " formulas, exceeding the enumeration cap of " + std::to_string(cap)) {}
};

// Ordered, duplicate-free formula list indexed by input position.
class FormulaList {
public:
  FormulaList() = default;

  // Structural duplicates are dropped; returns false for a duplicate.
  bool add(const Formula& f) { return set_.add(f); }

  const std::vector<Formula>& formulas() const { return set_.members(); }
  const Formula& at(std::size_t i) const { return set_.members().at(i); }
  std::size_t size() const { return set_.size(); }
  bool empty() const { return set_.empty(); }

private:
  FormulaSet set_;
};

using KnowledgeBase = FormulaList;
using ClaimSet = FormulaList;

struct Argument {
  int id = 0;               // 1-based, assigned after collection
  SupportMask support = 0;  // bit i set <=> KB formula i is in the support
  int claim = 0;            // index into the claim set

  friend bool operator==(const Argument& a, const Argument& b) {
    return a.id == b.id && a.support == b.support && a.claim == b.claim;
  }
};

struct InstantiationConfig {
  int atom_cap = kDefaultAtomCap;
  std::size_t kb_cap = kDefaultKbCap;
};

inline std::vector<std::size_t> support_indices(SupportMask mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

inline FormulaSet support_formulas(const KnowledgeBase& kb, SupportMask mask) {
  FormulaSet fs;
  for (std::size_t i : support_indices(mask)) fs.add(kb.at(i));
  return fs;
}

// All nonempty subsets of {0..kb_size-1}, cardinality ascending, mask
// ascending within a cardinality. The visitor returns false to stop.
inline void for_each_candidate_support(std::size_t kb_size, std::size_t kb_cap,
                                       const std::function<bool(SupportMask)>& visit) {
  if (kb_size > kb_cap) throw KbCapError(kb_size, kb_cap);
  if (kb_size == 0) return;
  SupportMask full = (kb_size == 32) ? ~SupportMask{0} : ((SupportMask{1} << kb_size) - 1);
  for (std::size_t k = 1; k <= kb_size; ++k) {
    SupportMask mask = (SupportMask{1} << k) - 1;
    for (;;) {
      if (!visit(mask)) return;
      if (mask == (full & (full << (kb_size - k)))) break;  // highest k-subset
      // Gosper's hack: next mask with the same popcount.
      SupportMask lowest = mask & (~mask + 1);
      SupportMask ripple = mask + lowest;
      SupportMask ones = mask ^ ripple;
      mask = ripple | ((ones >> 2) / lowest);
    }
  }
}

inline std::vector<SupportMask> candidate_supports(std::size_t kb_size,
                                                   std::size_t kb_cap = kDefaultKbCap) {
  std::vector<SupportMask> out;
  for_each_candidate_support(kb_size, kb_cap, [&](SupportMask m) {
    out.push_back(m);
    return true;
  });
  return out;
}

// Remove-one minimality; for a singleton support the removed set is empty,
// so the check degenerates to "the claim is not a tautology". Monotonicity
// of classical entailment makes the single-removal test sufficient.
inline bool is_minimal_support(const KnowledgeBase& kb, SupportMask support, const Formula& claim,
                               int atom_cap = kDefaultAtomCap) {
  for (std::size_t i : support_indices(support)) {
    FormulaSet reduced = support_formulas(kb, support & ~(SupportMask{1} << i));
    if (entails(reduced, claim, atom_cap)) return false;
  }
  return true;
}

// Exhaustive enumeration with per-claim superset pruning: once a support
// is accepted for a claim, every strict superset of it fails minimality
// for that claim and is skipped. Ids run 1..n ordered by (claim index,
// support mask).
inline std::vector<Argument> enumerate_arguments(const KnowledgeBase& kb, const ClaimSet& cs,
                                                 const InstantiationConfig& config = {}) {
  std::vector<Argument> out;
  for (int c = 0; c < static_cast<int>(cs.size()); ++c) {
    const Formula& claim = cs.at(c);
    std::vector<SupportMask> accepted;
    for_each_candidate_support(kb.size(), config.kb_cap, [&](SupportMask mask) {
      for (SupportMask m : accepted)
        if ((m & mask) == m) return true;  // strict superset of a minimal support
      FormulaSet fs = support_formulas(kb, mask);
      if (!is_consistent(fs, config.atom_cap)) return true;
      if (!entails(fs, claim, config.atom_cap)) return true;
      if (!is_minimal_support(kb, mask, claim, config.atom_cap)) return true;
      accepted.push_back(mask);
      return true;
    });
    std::sort(accepted.begin(), accepted.end());
    for (SupportMask m : accepted) out.push_back(Argument{0, m, c});
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i + 1);
  return out;
}

}  // namespace afinst

#endif  // AFINST_INSTANTIATE_HPP
