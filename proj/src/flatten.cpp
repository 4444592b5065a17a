#include "pts/flatten.hpp"

#include <algorithm>

#include "pts/error.hpp"

namespace pts {

std::string FlatMap::floorName(const FormulaRef& f) const {
  if (f->isAtom()) return f->atomName();
  for (std::size_t i = 0; i < compounds.size(); ++i)
    if (equal(compounds[i], f)) return freshNames[i];
  throw Error("formula '" + printFormula(f) + "' is not a subformula of the sequent");
}

FormulaRef FlatMap::preimage(const std::string& atomName) const {
  for (std::size_t i = 0; i < freshNames.size(); ++i)
    if (freshNames[i] == atomName) return compounds[i];
  return Formula::atom(atomName);
}

FlatMap flatten(const Sequent& s) {
  FlatMap m;
  m.subformulaOrder = subformulas(s);
  std::vector<std::string> originals;
  for (const auto& f : m.subformulaOrder) {
    if (f->isAtom()) {
      if (isFlatteningAtomName(f->atomName()))
        throw Error("input mentions reserved flattening atom '" + f->atomName() + "'");
      originals.push_back(f->atomName());
    } else {
      m.freshNames.push_back("#" + std::to_string(m.compounds.size()));
      m.compounds.push_back(f);
    }
  }
  m.atomStar = originals;
  for (const auto& n : m.freshNames) m.atomStar.push_back(n);
  return m;
}

const NBase::Origin& NBase::originOf(const AtomicRule& r) const {
  auto it = origins.find(printRule(r));
  if (it == origins.end())
    throw Error("rule '" + printRule(r) + "' was not generated from a deduction schema");
  return it->second;
}

NBase buildBaseN(const Sequent& s) {
  NBase nb;
  nb.sequent = s;
  nb.flat = flatten(s);
  const FlatMap& fm = nb.flat;

  std::vector<AtomicRule> rules;
  auto emit = [&](AtomicRule r, NBase::Schema schema, FormulaRef principal,
                  std::string target = "") {
    r.canonicalize();
    std::string key = printRule(r);
    // Colliding schemas produce interchangeable proofs; first origin wins.
    nb.origins.emplace(key, NBase::Origin{schema, std::move(principal), std::move(target)});
    rules.push_back(std::move(r));
  };

  for (const auto& xi : fm.subformulaOrder) {
    switch (xi->conn()) {
      case Conn::Atom:
        break;
      case Conn::And: {
        std::string l = fm.floorName(xi->lhs()), r = fm.floorName(xi->rhs());
        std::string w = fm.floorName(xi);
        emit(AtomicRule{{{{}, l}, {{}, r}}, w}, NBase::Schema::AndI, xi);
        emit(AtomicRule{{{{}, w}}, l}, NBase::Schema::AndE1, xi);
        emit(AtomicRule{{{{}, w}}, r}, NBase::Schema::AndE2, xi);
        break;
      }
      case Conn::Imp: {
        std::string l = fm.floorName(xi->lhs()), r = fm.floorName(xi->rhs());
        std::string w = fm.floorName(xi);
        emit(AtomicRule{{{{l}, r}}, w}, NBase::Schema::ImpI, xi);
        emit(AtomicRule{{{{}, w}, {{}, l}}, r}, NBase::Schema::ImpE, xi);
        break;
      }
      case Conn::Or: {
        std::string l = fm.floorName(xi->lhs()), r = fm.floorName(xi->rhs());
        std::string w = fm.floorName(xi);
        emit(AtomicRule{{{{}, l}}, w}, NBase::Schema::OrI1, xi);
        emit(AtomicRule{{{{}, r}}, w}, NBase::Schema::OrI2, xi);
        for (const auto& p : fm.atomStar)
          emit(AtomicRule{{{{}, w}, {{l}, p}, {{r}, p}}, p}, NBase::Schema::OrE, xi, p);
        break;
      }
      case Conn::Bot: {
        std::string w = fm.floorName(xi);
        for (const auto& p : fm.atomStar)
          emit(AtomicRule{{{{}, w}}, p}, NBase::Schema::BotE, xi, p);
        break;
      }
      case Conn::Top: {
        emit(AtomicRule{{}, fm.floorName(xi)}, NBase::Schema::TopI, xi);
        break;
      }
    }
  }

  nb.base = Base(fm.atomStar, std::move(rules));
  return nb;
}

}  // namespace pts
