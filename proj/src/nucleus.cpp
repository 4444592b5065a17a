#include "pts/nucleus.hpp"

#include <algorithm>

#include "pts/error.hpp"

namespace pts {

const Bits& Nucleus::apply(const Bits& upset) const {
  auto it = memo_->find(upset);
  if (it != memo_->end()) return it->second;
  if (!poset_->isUpClosed(upset))
    throw Error("nucleus '" + name_ + "' applied to a non-up-closed set");
  Bits out = fn_(upset);
  return memo_->emplace(upset, std::move(out)).first->second;
}

std::vector<std::pair<Bits, Bits>> Nucleus::tabulate() const {
  std::vector<std::pair<Bits, Bits>> table;
  for (const Bits& u : enumerateUpSets(*poset_)) table.emplace_back(u, apply(u));
  return table;
}

Nucleus identityNucleus(const Poset& p) {
  return Nucleus(p, "id", [](const Bits& u) { return u; });
}

Nucleus nucleusFromElement(const Poset& p, const Bits& h) {
  if (!p.isUpClosed(h)) throw Error("nucleusFromElement requires an up-closed element");
  return Nucleus(p, "j_h", [&p, h](const Bits& u) {
    return heytingImp(p, heytingImp(p, u, h), h);
  });
}

Nucleus meetNuclei(const Poset& p, std::vector<Nucleus> components) {
  if (components.empty()) throw Error("meetNuclei requires a nonempty family");
  for (const auto& c : components)
    if (&c.poset() != &p) throw Error("meetNuclei components live on mismatched posets");
  auto shared = std::make_shared<std::vector<Nucleus>>(std::move(components));
  return Nucleus(p, "meet", [shared](const Bits& u) {
    Bits out = (*shared)[0].apply(u);
    for (std::size_t i = 1; i < shared->size(); ++i) out &= (*shared)[i].apply(u);
    return out;
  });
}

Nucleus sandqvistNucleus(const WorldUniverse& u, const Poset& p) {
  if (u.atoms().empty()) throw Error("sandqvistNucleus requires a nonempty atom universe");
  std::vector<Nucleus> parts;
  for (const auto& a : u.atoms()) parts.push_back(nucleusFromElement(p, u.derivSet(a)));
  Nucleus j = meetNuclei(p, std::move(parts));
  return Nucleus(p, "J", [j](const Bits& x) { return j.apply(x); });
}

NucleusLawReport checkNucleusLaws(const Poset& p, const Nucleus& j) {
  NucleusLawReport report;
  std::vector<Bits> upsets = enumerateUpSets(p);
  for (const Bits& a : upsets) {
    const Bits& ja = j.apply(a);
    if (report.increasing && !a.subsetOf(ja)) {
      report.increasing = false;
      report.witnesses.push_back("increasing fails at a=" + a.str());
    }
    if (report.idempotent && j.apply(ja) != ja) {
      report.idempotent = false;
      report.witnesses.push_back("idempotent fails at a=" + a.str());
    }
    for (const Bits& b : upsets) {
      const Bits& jb = j.apply(b);
      if (report.orderPreserving && a.subsetOf(b) && !ja.subsetOf(jb)) {
        report.orderPreserving = false;
        report.witnesses.push_back("order-preserving fails at a=" + a.str() + ", b=" + b.str());
      }
      if (report.meetPreserving && j.apply(a & b) != (ja & jb)) {
        report.meetPreserving = false;
        report.witnesses.push_back("meet-preserving fails at a=" + a.str() + ", b=" + b.str());
      }
      if (!report.orderPreserving && !report.meetPreserving) break;
    }
  }
  return report;
}

bool FixSubalgebra::contains(const Bits& u) const {
  return std::find(carrier.begin(), carrier.end(), u) != carrier.end();
}

FixSubalgebra fixSubalgebra(const Poset& p, const Nucleus& j) {
  FixSubalgebra alg;
  alg.poset = &p;
  for (const Bits& u : enumerateUpSets(p))
    if (j.apply(u) == u) alg.carrier.push_back(u);
  return alg;
}

const Bits& JInterp::denote(const FormulaRef& f) {
  std::string key = printFormula(f);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Bits v = compute(f);
  return memo_.emplace(std::move(key), std::move(v)).first->second;
}

Bits JInterp::compute(const FormulaRef& f) {
  switch (f->conn()) {
    case Conn::Atom:
      return j_.apply(uni_.derivSet(f->atomName()));
    case Conn::Top:
      return poset_.full();
    case Conn::Bot:
      return j_.apply(Bits(poset_.size()));
    case Conn::And:
      // Fixed points are closed under meets; no outer j.
      return denote(f->lhs()) & denote(f->rhs());
    case Conn::Imp:
      // a → b lands in H_j whenever b does; no outer j.
      return heytingImp(poset_, denote(f->lhs()), denote(f->rhs()));
    case Conn::Or:
      return j_.apply(denote(f->lhs()) | denote(f->rhs()));
  }
  throw Error("unreachable formula kind");
}

}  // namespace pts
