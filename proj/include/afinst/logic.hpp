#ifndef AFINST_LOGIC_HPP
#define AFINST_LOGIC_HPP

// Decision procedures over finite atom sets: model enumeration,
// consistency, entailment and equivalence by exhaustive assignment
// search with early short-circuit.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "afinst/formula.hpp"

namespace afinst {

inline constexpr int kDefaultAtomCap = 24;

class AtomCapError : public std::runtime_error {
public:
  AtomCapError(std::size_t count, int cap)
      : std::runtime_error("atom universe has " + std::to_string(count) +
                           " atoms, exceeding the cap of " + std::to_string(cap)),
        count_(count) {}
  std::size_t count() const { return count_; }

private:
  std::size_t count_;
};

// Ordered, structurally duplicate-free collection of formulae together
// with the union of their atoms.
class FormulaSet {
public:
  FormulaSet() = default;

  explicit FormulaSet(const std::vector<Formula>& members) {
    for (const auto& f : members) add(f);
  }

  // Returns false if an equal member was already present.
  bool add(const Formula& f) {
    if (!keys_.insert(print_formula(f, PrintStyle::Prefix)).second) return false;
    members_.push_back(f);
    for (const auto& a : atoms(f)) atom_universe_.insert(a);
    return true;
  }

  const std::vector<Formula>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  std::vector<std::string> atom_universe() const {
    return {atom_universe_.begin(), atom_universe_.end()};
  }

private:
  std::vector<Formula> members_;
  std::set<std::string> keys_;
  std::set<std::string> atom_universe_;
};

namespace detail {

// Evaluation against a bit-packed assignment; atom index i (lexicographic)
// occupies bit (n-1-i), so ascending masks enumerate assignments with the
// first atom as the most significant bit.
inline bool eval_mask(const Formula& f, const std::vector<std::string>& atoms_sorted,
                      std::uint32_t mask) {
  switch (f.kind()) {
    case Conn::Atom: {
      auto it = std::lower_bound(atoms_sorted.begin(), atoms_sorted.end(), f.atom_name());
      std::size_t i = static_cast<std::size_t>(it - atoms_sorted.begin());
      return (mask >> (atoms_sorted.size() - 1 - i)) & 1u;
    }
    case Conn::Neg: return !eval_mask(f.left(), atoms_sorted, mask);
    case Conn::And:
      return eval_mask(f.left(), atoms_sorted, mask) && eval_mask(f.right(), atoms_sorted, mask);
    case Conn::Or:
      return eval_mask(f.left(), atoms_sorted, mask) || eval_mask(f.right(), atoms_sorted, mask);
    case Conn::Imp:
      return !eval_mask(f.left(), atoms_sorted, mask) || eval_mask(f.right(), atoms_sorted, mask);
    case Conn::Iff:
      return eval_mask(f.left(), atoms_sorted, mask) == eval_mask(f.right(), atoms_sorted, mask);
    case Conn::Xor:
      return eval_mask(f.left(), atoms_sorted, mask) != eval_mask(f.right(), atoms_sorted, mask);
  }
  throw std::logic_error("unreachable");
}

inline std::vector<std::string> checked_universe(const FormulaSet& fs, int atom_cap) {
  auto universe = fs.atom_universe();
  if (static_cast<int>(universe.size()) > atom_cap)
    throw AtomCapError(universe.size(), atom_cap);
  return universe;
}

// Visits models in ascending bit-pattern order; stops early when the
// visitor returns false. Candidates are abandoned at the first falsified
// member.
inline void for_each_model(const FormulaSet& fs, int atom_cap,
                           const std::function<bool(std::uint32_t, const std::vector<std::string>&)>& visit) {
  auto universe = checked_universe(fs, atom_cap);
  std::uint64_t total = 1ull << universe.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool ok = true;
    for (const auto& f : fs.members()) {
      if (!eval_mask(f, universe, static_cast<std::uint32_t>(mask))) {
        ok = false;
        break;
      }
    }
    if (ok && !visit(static_cast<std::uint32_t>(mask), universe)) return;
  }
}

inline Interpretation mask_to_interpretation(std::uint32_t mask,
                                             const std::vector<std::string>& universe) {
  std::map<std::string, bool> assign;
  for (std::size_t i = 0; i < universe.size(); ++i)
    assign[universe[i]] = (mask >> (universe.size() - 1 - i)) & 1u;
  return Interpretation(std::move(assign));
}

}  // namespace detail

inline std::vector<Interpretation> enumerate_models(const FormulaSet& fs,
                                                    int atom_cap = kDefaultAtomCap) {
  std::vector<Interpretation> out;
  detail::for_each_model(fs, atom_cap, [&](std::uint32_t mask, const auto& universe) {
    out.push_back(detail::mask_to_interpretation(mask, universe));
    return true;
  });
  return out;
}

inline bool is_consistent(const FormulaSet& fs, int atom_cap = kDefaultAtomCap) {
  bool found = false;
  detail::for_each_model(fs, atom_cap, [&](std::uint32_t, const auto&) {
    found = true;
    return false;
  });
  return found;
}

// S |= C  iff  S together with !C has no model; the atom universe covers
// conclusion-only atoms as well.
inline bool entails(const FormulaSet& premises, const Formula& conclusion,
                    int atom_cap = kDefaultAtomCap) {
  FormulaSet refutation(premises.members());
  refutation.add(Formula::neg(conclusion));
  return !is_consistent(refutation, atom_cap);
}

inline bool is_equivalent(const Formula& f, const Formula& g, int atom_cap = kDefaultAtomCap) {
  FormulaSet difference;
  difference.add(Formula::xor_(f, g));
  return !is_consistent(difference, atom_cap);
}

}  // namespace afinst

#endif  // AFINST_LOGIC_HPP
