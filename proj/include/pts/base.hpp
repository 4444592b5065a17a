#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pts/bitset.hpp"

namespace pts {

// One antecedent clause (P => a): derive a from the premises P.
struct RuleClause {
  std::vector<std::string> premises;  // sorted, duplicate-free
  std::string conclusion;

  friend bool operator==(const RuleClause&, const RuleClause&) = default;
};

// Second-level atomic rule ((P1 => a1), ..., (Pn => an) => b), n >= 0.
// Canonical form sorts premise sets and the clause list and collapses
// duplicate clauses.
struct AtomicRule {
  std::vector<RuleClause> antecedents;
  std::string conclusion;

  void canonicalize();
  friend bool operator==(const AtomicRule&, const AtomicRule&) = default;
};

// rule := clauses '=>' atom | '=>' atom
// clauses := clause (',' clause)* ; clause := '(' '[' atomlist? ']' '=>' atom ')'
AtomicRule parseRule(std::string_view text);
std::string printRule(const AtomicRule& r);

// Finite set of atomic rules over an explicit atom universe. Rules are
// kept canonical: sorted by printed form, duplicate-free, and every
// mentioned atom must be in the universe.
class Base {
public:
  Base() = default;
  Base(std::vector<std::string> atomUniverse, std::vector<AtomicRule> rules);

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<AtomicRule>& rules() const { return rules_; }

  bool hasAtom(const std::string& name) const;
  std::size_t atomIndex(const std::string& name) const;  // throws on unknown

  bool subsetOf(const Base& other) const;  // rule-set inclusion
  Base withRules(std::vector<AtomicRule> extra) const;

  Bits atomSet(const std::vector<std::string>& names) const;  // throws on unknown

  friend bool operator==(const Base&, const Base&) = default;

private:
  std::vector<std::string> atoms_;  // sorted
  std::vector<AtomicRule> rules_;   // canonical order
};

// B' = B ∪ {(=> p) | p ∈ P}.
Base promoteContext(const Base& b, const std::vector<std::string>& promoted);

// File format: optional '#' comment lines, one "atoms: a, b" line, then
// one rule per line in parseRule syntax.
Base parseBaseFile(std::string_view text);
std::string printBaseFile(const Base& b);

}  // namespace pts
