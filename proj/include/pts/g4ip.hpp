#pragma once

#include <vector>

#include "pts/formula.hpp"

namespace pts {

// Decides intuitionistic propositional provability of Γ ⊢ φ with a
// terminating contraction-free sequent calculus (left-implication rules
// split by the shape of the antecedent's antecedent):
//
//   axioms    Γ, a ⇒ a   Γ, ⊥ ⇒ G   Γ ⇒ ⊤
//   right     ∧: both premises; ⊃: move antecedent left; ∨: try either
//   left      ⊤ dropped; ∧ unpaired; ∨ split; ⊤⊃ψ → ψ; ⊥⊃ψ dropped;
//             a⊃ψ → ψ when a ∈ Γ; (φ∧ψ)⊃θ → φ⊃(ψ⊃θ);
//             (φ∨ψ)⊃θ → φ⊃θ, ψ⊃θ;
//             (φ⊃ψ)⊃θ: prove Γ, ψ⊃θ ⇒ φ⊃ψ and Γ, θ ⇒ G
bool g4ipProvable(std::vector<FormulaRef> gamma, FormulaRef goal);
bool g4ipProvable(const Sequent& s);

}  // namespace pts
