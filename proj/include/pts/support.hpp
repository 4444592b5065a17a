#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "pts/bitset.hpp"
#include "pts/formula.hpp"
#include "pts/universe.hpp"

namespace pts {

// Evaluates the support clauses over a fixed world universe. Results are
// memoized per formula as the set of supporting worlds; every quantifier
// ("for every C ⊇ B", "for every atom") ranges over the universe.
//
// Clauses:
//   (At)  B supports a       iff ⊢_B a
//   (⊤)   always
//   (∧)   both conjuncts
//   (⊃)   {φ} infers ψ at B
//   (∨)   for every atom a and every C ⊇ B,
//         if φ infers a at C and ψ infers a at C, then C supports a
//   (⊥)   B supports every atom of the universe
//   (Inf) Θ infers φ at B iff every C ⊇ B supporting all of Θ supports φ
class SupportEngine {
public:
  explicit SupportEngine(const WorldUniverse& u) : uni_(u) {}

  const WorldUniverse& universe() const { return uni_; }

  // Set of worlds supporting f; throws on atoms outside the universe.
  const Bits& supportSet(const FormulaRef& f);

  bool supports(std::size_t world, const FormulaRef& f);
  // Validates B ∈ W first.
  bool supports(const Base& b, const FormulaRef& f);

  bool infers(std::size_t world, const std::vector<FormulaRef>& theta, const FormulaRef& f);
  bool valid(const std::vector<FormulaRef>& gamma, const FormulaRef& f);

private:
  const WorldUniverse& uni_;
  std::unordered_map<std::string, Bits> memo_;

  Bits compute(const FormulaRef& f);
  // {B | ∀C ⊇ B: C ∈ ifIn → C ∈ thenIn}, by explicit cone loops.
  Bits conditionAbove(const Bits& ifIn, const Bits& thenIn) const;
};

}  // namespace pts
