#pragma once

#include <string>
#include <vector>

#include "pts/derivation.hpp"
#include "pts/flatten.hpp"
#include "pts/formula.hpp"

namespace pts {

// Natural-deduction proof tree (NJ). Each node records its concluded
// formula; open hypotheses are recomputed by the checker.
struct NDProof {
  enum class Rule { Hyp, AndI, AndE1, AndE2, ImpI, ImpE, OrI1, OrI2, OrE, BotE, TopI };

  Rule rule;
  FormulaRef conclusion;
  FormulaRef discharge1;  // ImpI: the discharged antecedent; OrE: left case
  FormulaRef discharge2;  // OrE: right case
  std::vector<NDProof> premises;
};

std::string ruleName(NDProof::Rule r);

// True iff every node is locally well-formed, the open hypotheses are
// all antecedents of s, and the root concludes the succedent.
bool ndCheck(const NDProof& p, const Sequent& s);

// Maps a derivation in base N back to the NJ proof it translates:
// Ref nodes become hypotheses, App nodes the rule recorded in the
// NBase provenance. Throws if the derivation uses a rule that was not
// generated from a deduction schema.
NDProof derivationToNd(const NBase& nb, const DerivationTree& d);

}  // namespace pts
