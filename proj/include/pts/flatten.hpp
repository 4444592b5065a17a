#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pts/base.hpp"
#include "pts/formula.hpp"

namespace pts {

// Injective assignment of fresh "#k" atoms to the compound subformulas
// of a sequent; identity on atoms. Fresh names follow subformula order.
struct FlatMap {
  std::vector<FormulaRef> subformulaOrder;         // Ξ
  std::vector<FormulaRef> compounds;               // compounds of Ξ, in order
  std::vector<std::string> freshNames;             // parallel to compounds
  std::vector<std::string> atomStar;               // At*: originals then fresh

  // ⌊φ⌋ as an atom name; φ must be in Ξ.
  std::string floorName(const FormulaRef& f) const;
  // Inverse of floorName: maps "#k" to its compound and original atoms
  // to themselves.
  FormulaRef preimage(const std::string& atomName) const;
};

// Throws if the sequent already mentions reserved "#k" atoms.
FlatMap flatten(const Sequent& s);

// The base whose rules are the flattened translates of natural-deduction
// rule instances over Ξ, with provenance for translating derivations
// back into proofs.
struct NBase {
  enum class Schema { AndI, AndE1, AndE2, ImpI, ImpE, OrI1, OrI2, OrE, BotE, TopI };
  struct Origin {
    Schema schema;
    FormulaRef principal;       // the Ξ member the rule was generated from
    std::string targetAtom;     // OrE/BotE target p ∈ At*
  };

  Sequent sequent;
  FlatMap flat;
  Base base;
  std::map<std::string, Origin> origins;  // key: printRule of the canonical rule

  const Origin& originOf(const AtomicRule& r) const;
};

NBase buildBaseN(const Sequent& s);

}  // namespace pts
