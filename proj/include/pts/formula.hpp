#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace pts {

enum class Conn { Atom, Top, Bot, And, Or, Imp };

class Formula;
using FormulaRef = std::shared_ptr<const Formula>;

// Immutable propositional formula tree. Atom names match
// [a-z][a-zA-Z0-9_]* except for flattening atoms "#k", which are only
// produced internally and never accepted by the formula parser.
class Formula {
public:
  static FormulaRef atom(std::string name);
  static FormulaRef top();
  static FormulaRef bot();
  static FormulaRef conj(FormulaRef l, FormulaRef r);
  static FormulaRef disj(FormulaRef l, FormulaRef r);
  static FormulaRef imp(FormulaRef l, FormulaRef r);

  Conn conn() const { return conn_; }
  bool isAtom() const { return conn_ == Conn::Atom; }
  const std::string& atomName() const { return name_; }
  const FormulaRef& lhs() const { return lhs_; }
  const FormulaRef& rhs() const { return rhs_; }

private:
  Conn conn_;
  std::string name_;
  FormulaRef lhs_, rhs_;
  Formula(Conn c, std::string n, FormulaRef l, FormulaRef r)
      : conn_(c), name_(std::move(n)), lhs_(std::move(l)), rhs_(std::move(r)) {}
};

bool equal(const Formula& a, const Formula& b);
inline bool equal(const FormulaRef& a, const FormulaRef& b) { return equal(*a, *b); }
// Total structural order; used for canonical sorting.
int compare(const Formula& a, const Formula& b);

// Antecedents are duplicate-free, in first-occurrence order.
struct Sequent {
  std::vector<FormulaRef> antecedents;
  FormulaRef succedent;
};

// Grammar: imp := or ('->' imp)? ; or := and ('|' and)* ;
//          and := unit ('&' unit)* ; unit := atom | 'bot' | 'top' | '(' imp ')'
// '->' is right-associative, '&' and '|' left-associative.
FormulaRef parseFormula(std::string_view text);
// "phi1, phi2 |- psi"; empty antecedent as "|- psi".
Sequent parseSequent(std::string_view text);

// Canonical rendering; parseFormula(printFormula(f)) reproduces f.
std::string printFormula(const Formula& f);
inline std::string printFormula(const FormulaRef& f) { return printFormula(*f); }
std::string printSequent(const Sequent& s);

// All subformulas, closed under subterms, in post-order of first occurrence.
std::vector<FormulaRef> subformulas(const Sequent& s);
std::vector<FormulaRef> subformulas(const FormulaRef& f);

// True for names of the reserved flattening shape "#k".
bool isFlatteningAtomName(std::string_view name);
// Validates either a regular atom name or a flattening atom name.
bool isValidAtomName(std::string_view name);

}  // namespace pts
