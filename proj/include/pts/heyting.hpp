#pragma once

#include <map>
#include <string>

#include "pts/bitset.hpp"
#include "pts/formula.hpp"
#include "pts/poset.hpp"
#include "pts/universe.hpp"

namespace pts {

// Interpretation of atoms as up-sets; must cover every atom looked up.
struct CanonicalInterp {
  std::map<std::string, Bits> sigma;

  const Bits& at(const std::string& atom) const;
};

// Poset of the universe's worlds under rule inclusion.
Poset posetOf(const WorldUniverse& u);

// σ_deriv: each atom denotes the worlds deriving it.
CanonicalInterp derivabilityInterp(const WorldUniverse& u);

// Heyting implication in the up-set algebra:
// {B | ∀C ⊇ B: C ∈ u implies C ∈ v}. Inputs must be up-closed.
Bits heytingImp(const Poset& p, const Bits& u, const Bits& v);

// Kripke truth sets, computed pointwise from the standard clauses with
// derivability at atoms (∨ as union, ⊥ as never, ⊃ over extensions).
Bits denoteKripke(const WorldUniverse& u, const FormulaRef& f);

// Canonical algebraic interpretation via lattice operations on up-sets.
Bits denoteAlgebraic(const Poset& p, const CanonicalInterp& sigma, const FormulaRef& f);

}  // namespace pts
