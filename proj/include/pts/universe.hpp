#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pts/base.hpp"
#include "pts/bitset.hpp"

namespace pts {

// Finite family of bases over a fixed atom set and rule universe,
// ordered by rule-set inclusion. Worlds are identified by bitmasks over
// rule indices; in all-subsets mode the world index equals its mask.
class WorldUniverse {
public:
  // All 2^n subsets of the rule universe; refuses more than 20 rules.
  static WorldUniverse allSubsets(std::vector<std::string> atoms, std::vector<AtomicRule> rules);
  // An explicit family; must be closed upward within the subset lattice
  // of the rule universe (checked).
  static WorldUniverse explicitFamily(std::vector<std::string> atoms,
                                      std::vector<AtomicRule> rules,
                                      std::vector<std::uint64_t> masks);

  bool isAllSubsets() const { return allSubsets_; }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<AtomicRule>& rules() const { return rules_; }

  std::size_t worldCount() const { return worlds_.size(); }
  std::uint64_t worldMask(std::size_t w) const { return worlds_[w]; }
  Base worldBase(std::size_t w) const;
  std::string worldName(std::size_t w) const;  // rule-index set, e.g. "{0,2}"

  std::optional<std::size_t> indexOfMask(std::uint64_t mask) const;
  // Matches a base by its canonical rules; atoms must agree.
  std::optional<std::size_t> indexOfBase(const Base& b) const;

  bool worldLeq(std::size_t a, std::size_t b) const {
    return (worlds_[a] & ~worlds_[b]) == 0;
  }

  // Visits every world C ⊇ w. The visitor returns false to stop early;
  // forEachAbove returns false iff it was stopped.
  template <class F>
  bool forEachAbove(std::size_t w, F&& f) const {
    if (allSubsets_) {
      std::uint64_t m = worlds_[w];
      std::uint64_t full = fullMask();
      for (std::uint64_t s = m;; s = (s + 1) | m) {
        if (!f(static_cast<std::size_t>(s))) return false;
        if (s == full) break;
      }
      return true;
    }
    for (std::size_t j : cones_[w])
      if (!f(j)) return false;
    return true;
  }

  // Worlds deriving `atom` from the empty context (σ_deriv).
  const Bits& derivSet(const std::string& atom) const;
  const Bits& derivSet(std::size_t atomIdx) const;

  std::size_t atomIndex(const std::string& atom) const;

private:
  std::vector<std::string> atoms_;   // sorted
  std::vector<AtomicRule> rules_;    // indexed as declared
  bool allSubsets_ = true;
  std::vector<std::uint64_t> worlds_;
  std::vector<std::vector<std::size_t>> cones_;  // explicit mode only
  mutable std::vector<Bits> derivSets_;          // lazy, per atom

  std::uint64_t fullMask() const {
    return rules_.size() == 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << rules_.size()) - 1;
  }
  void validateRules() const;
  void computeDerivSets() const;
};

// Universe file format:
//   atoms: a, b
//   rules:
//     0: => a
//     1: ([a] => b) => b
//   bases: all-subsets        (or a block of rule-index sets, e.g. {0,1})
WorldUniverse parseUniverseFile(std::string_view text);

}  // namespace pts
