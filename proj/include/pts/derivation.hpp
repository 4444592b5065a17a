#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pts/base.hpp"
#include "pts/bitset.hpp"

namespace pts {

// Proof tree for P ⊢_B a. A Ref node closes a branch with an atom from
// its context; an App node applies a base rule, one subtree per
// antecedent clause, each in the parent context extended by that
// clause's premises.
struct DerivationTree {
  bool isRef = true;
  std::string atom;                   // concluded atom
  std::vector<std::string> context;   // sorted
  std::size_t ruleIndex = 0;          // into base.rules(), App only
  std::vector<DerivationTree> children;
};

// Least relation closed under (Ref) and (App), computed by monotone
// fixpoint iteration over the contexts reachable from `context` by
// unioning rule premise sets. Throws on atoms outside the universe.
bool derives(const Base& b, const std::vector<std::string>& context, const std::string& goal);

// Derivation tree for the same judgment, or nullopt. Deterministic:
// justifications are recorded the first time a judgment is derived,
// scanning rules in canonical order.
std::optional<DerivationTree> deriveTree(const Base& b, const std::vector<std::string>& context,
                                         const std::string& goal);

// Structural validity of a derivation tree against a base.
bool checkDerivationTree(const Base& b, const DerivationTree& t,
                         const std::vector<std::string>& context, const std::string& goal);

// Saturates a base once over the closure of several seed contexts, so
// many (context, atom) queries can be answered by lookup.
class Saturation {
public:
  Saturation(const Base& b, const std::vector<Bits>& seedContexts);

  // `context` must be one of the seeds or reachable from them.
  bool derivable(const Bits& context, std::size_t atomIdx) const;
  std::optional<DerivationTree> tree(const Bits& context, std::size_t atomIdx) const;

  // Atoms derivable from the empty context, as a Bits over base atoms.
  Bits emptyContextAtoms() const;

private:
  const Base& base_;
  std::size_t nAtoms_;
  struct Clause {
    Bits premises;
    std::size_t conclusion;
  };
  struct Rule {
    std::vector<Clause> clauses;
    std::size_t conclusion;
  };
  std::vector<Rule> rules_;
  std::vector<Bits> ctxs_;
  std::unordered_map<Bits, std::size_t, BitsHash> ctxId_;
  std::vector<Bits> derived_;            // per context: derivable atoms
  std::vector<std::vector<int>> just_;   // per context/atom: rule index, -1 = Ref, -2 = none

  std::size_t internCtx(const Bits& ctx);
  void saturate();
  DerivationTree buildTree(std::size_t ctx, std::size_t atom) const;
};

}  // namespace pts
