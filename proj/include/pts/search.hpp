#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pts/base.hpp"

namespace pts {

// Propositional definite clause: body atoms imply the head; facts have
// an empty body. Clause order is the search order.
struct Clause {
  std::vector<std::string> body;
  std::string head;
};

struct Program {
  std::vector<Clause> clauses;

  std::vector<std::string> atoms() const;  // sorted, duplicate-free
};

// One clause per line: facts as bare atoms, rules as "a1 & a2 -> a".
// '#' starts a comment line.
Program parseProgramFile(std::string_view text);

struct SearchEvent {
  enum class Kind { TryClause, Fail, Succeed, SwapContinuation };
  Kind kind;
  std::string goal;       // TryClause/Fail/Succeed
  int clause = -1;        // TryClause
  int from = -1, to = -1; // SwapContinuation: clause indices

  friend bool operator==(const SearchEvent&, const SearchEvent&) = default;
};

std::string printEvent(const SearchEvent& e);

enum class SolveStatus { Proved, Refuted, DepthCapped };

struct SolveResult {
  SolveStatus status;
  std::vector<SearchEvent> trace;
};

// Depth-first search with explicit success and failure continuations:
// a failure abandons the current continuation and resumes the saved
// alternative (recorded as a SwapContinuation event). The depth cap
// bounds the goal stack; exceeding it reports DepthCapped, distinct
// from Refuted.
SolveResult solve(const Program& p, const std::string& goal, std::size_t depthCap = 64);

struct AgreementItem {
  std::string atom;
  SolveStatus solveStatus;
  bool derivable;
  bool flagged;  // depth-capped pair needing attention
};

struct AgreementReport {
  std::vector<AgreementItem> items;
  bool consistent;  // no Proved/Refuted answer disagrees with derivability
};

// Translates each clause (body ⊃ head) to the atomic rule
// ((=> b1), ..., (=> bn) => head) and compares solve against derivability
// from the empty context for every program atom.
AgreementReport solveAgreesWithDerivability(const Program& p, std::size_t depthCap = 64);

// The translated base itself.
Base programBase(const Program& p);

}  // namespace pts
