#ifndef AFINST_SEMANTICS_HPP
#define AFINST_SEMANTICS_HPP

// Abstract AF evaluation: conflict-free sets and stable extensions by
// exhaustive subset search over argument ids 1..n.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "afinst/attacks.hpp"

namespace afinst {

inline constexpr int kDefaultExtensionCap = 24;

class ExtensionCapError : public std::runtime_error {
public:
  ExtensionCapError(int n, int cap)
      : std::runtime_error("framework has " + std::to_string(n) +
                           " arguments, exceeding the exhaustive-search cap of " +
                           std::to_string(cap)) {}
};

// Directed attack graph over argument ids 1..n, one attack kind.
struct ArgumentationFramework {
  int n = 0;
  std::vector<std::pair<int, int>> att;

  static ArgumentationFramework from_attacks(int n, const std::vector<Attack>& attacks,
                                             AttackType kind) {
    ArgumentationFramework af;
    af.n = n;
    for (const Attack& a : attacks)
      if (a.kind == kind) af.att.emplace_back(a.from, a.to);
    std::sort(af.att.begin(), af.att.end());
    af.att.erase(std::unique(af.att.begin(), af.att.end()), af.att.end());
    return af;
  }
};

using Extension = std::vector<int>;  // sorted member ids

namespace detail {

inline void check_ids(const ArgumentationFramework& af, const Extension& ext) {
  for (int id : ext)
    if (id < 1 || id > af.n)
      throw std::out_of_range("argument id " + std::to_string(id) + " outside 1.." +
                              std::to_string(af.n));
}

inline std::uint32_t ext_mask(const Extension& ext) {
  std::uint32_t m = 0;
  for (int id : ext) m |= std::uint32_t{1} << (id - 1);
  return m;
}

// attackers_of[i] = mask of arguments attacking id i+1.
inline std::vector<std::uint32_t> attacker_masks(const ArgumentationFramework& af) {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(af.n), 0);
  for (auto [from, to] : af.att) {
    if (from < 1 || from > af.n || to < 1 || to > af.n)
      throw std::out_of_range("attack endpoint outside 1.." + std::to_string(af.n));
    out[static_cast<std::size_t>(to - 1)] |= std::uint32_t{1} << (from - 1);
  }
  return out;
}

inline bool mask_conflict_free(std::uint32_t mask, const std::vector<std::uint32_t>& attackers) {
  for (std::size_t i = 0; i < attackers.size(); ++i)
    if ((mask >> i) & 1u)
      if (attackers[i] & mask) return false;
  return true;
}

inline bool mask_stable(std::uint32_t mask, const std::vector<std::uint32_t>& attackers) {
  if (!mask_conflict_free(mask, attackers)) return false;
  for (std::size_t i = 0; i < attackers.size(); ++i)
    if (!((mask >> i) & 1u) && !(attackers[i] & mask)) return false;
  return true;
}

inline Extension mask_to_extension(std::uint32_t mask) {
  Extension ext;
  for (int id = 1; mask != 0; ++id, mask >>= 1)
    if (mask & 1u) ext.push_back(id);
  return ext;
}

template <typename Pred>
std::vector<Extension> collect_extensions(const ArgumentationFramework& af, int cap, Pred pred) {
  if (af.n > cap) throw ExtensionCapError(af.n, cap);
  auto attackers = attacker_masks(af);
  std::vector<Extension> out;
  std::uint64_t total = 1ull << af.n;
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (pred(static_cast<std::uint32_t>(mask), attackers))
      out.push_back(mask_to_extension(static_cast<std::uint32_t>(mask)));
  std::sort(out.begin(), out.end());  // lexicographic on member lists
  return out;
}

}  // namespace detail

inline bool is_conflict_free(const ArgumentationFramework& af, const Extension& ext) {
  detail::check_ids(af, ext);
  return detail::mask_conflict_free(detail::ext_mask(ext), detail::attacker_masks(af));
}

inline bool is_stable(const ArgumentationFramework& af, const Extension& ext) {
  detail::check_ids(af, ext);
  return detail::mask_stable(detail::ext_mask(ext), detail::attacker_masks(af));
}

inline std::vector<Extension> stable_extensions(const ArgumentationFramework& af,
                                                int cap = kDefaultExtensionCap) {
  return detail::collect_extensions(af, cap, [](std::uint32_t m, const auto& att) {
    return detail::mask_stable(m, att);
  });
}

inline std::vector<Extension> conflict_free_sets(const ArgumentationFramework& af,
                                                 int cap = kDefaultExtensionCap) {
  return detail::collect_extensions(af, cap, [](std::uint32_t m, const auto& att) {
    return detail::mask_conflict_free(m, att);
  });
}

}  // namespace afinst

#endif  // AFINST_SEMANTICS_HPP
