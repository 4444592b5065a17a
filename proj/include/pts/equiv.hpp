#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pts/formula.hpp"
#include "pts/universe.hpp"

namespace pts {

struct EquivCounterexample {
  std::string formula;
  std::string world;   // rule-index set
  bool lhs, rhs;
};

struct EquivReport {
  std::size_t formulasChecked = 0;    // distinct semantic signatures visited
  std::size_t universeWorlds = 0;
  std::vector<EquivCounterexample> counterexamples;

  bool pass() const { return counterexamples.empty(); }
};

// Checks support(B, φ) ⟺ B ∈ ⟦φ⟧_J for every world and every formula
// built from the universe's atoms, ⊤ and ⊥ up to the given depth.
//
// Both evaluations are compositional in the per-formula world sets, so
// formulas are deduplicated by their (support set, J set) signature;
// the check over representatives is exhaustive over all formulas of the
// given depth.
EquivReport checkSupportVsJ(const WorldUniverse& u, int maxDepth,
                            std::size_t signatureCap = 200000);

// Same enumeration for denoteKripke vs denoteAlgebraic over σ_deriv.
EquivReport checkKripkeVsAlgebraic(const WorldUniverse& u, int maxDepth,
                                   std::size_t signatureCap = 200000);

}  // namespace pts
