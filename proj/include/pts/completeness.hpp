#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pts/flatten.hpp"
#include "pts/formula.hpp"
#include "pts/nd.hpp"

namespace pts {

// ⌊Γ⌋ ⊢_N ⌊ψ⌋, over the base generated from the sequent.
bool proveViaBase(const Sequent& s);

struct BaseProofWitness {
  NBase nbase;
  DerivationTree derivation;
  NDProof proof;  // oval-removal translation of the derivation
};

// Witness for a positive proveViaBase answer, or nullopt.
std::optional<BaseProofWitness> proveViaBaseWitness(const Sequent& s);

struct DaggerCounterexample {
  std::string world;
  std::string formula;
  bool supportsFlat, supportsFormula;
};

struct DaggerReport {
  std::size_t worlds = 0;
  std::size_t formulasChecked = 0;
  std::vector<DaggerCounterexample> counterexamples;

  bool pass() const { return counterexamples.empty(); }
};

// Builds the family {B | N ⊆ B ⊆ N ∪ extras} and checks, for every
// world and every subformula φ of s, that ⌊φ⌋ and φ are supported at
// exactly the same worlds. Extra rules must be over At*; the family is
// capped at 2^20 worlds.
DaggerReport checkDagger(const Sequent& s, const std::vector<AtomicRule>& extraRules);

}  // namespace pts
