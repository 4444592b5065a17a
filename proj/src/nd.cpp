#include "pts/nd.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "pts/error.hpp"

namespace pts {

std::string ruleName(NDProof::Rule r) {
  switch (r) {
    case NDProof::Rule::Hyp: return "hyp";
    case NDProof::Rule::AndI: return "andI";
    case NDProof::Rule::AndE1: return "andE1";
    case NDProof::Rule::AndE2: return "andE2";
    case NDProof::Rule::ImpI: return "impI";
    case NDProof::Rule::ImpE: return "impE";
    case NDProof::Rule::OrI1: return "orI1";
    case NDProof::Rule::OrI2: return "orI2";
    case NDProof::Rule::OrE: return "orE";
    case NDProof::Rule::BotE: return "botE";
    case NDProof::Rule::TopI: return "topI";
  }
  return "?";
}

namespace {

using OpenHyps = std::map<std::string, int>;  // printed formula -> multiplicity

void mergeInto(OpenHyps& into, const OpenHyps& from) {
  for (const auto& [k, n] : from) into[k] += n;
}

// Discharge removes every open occurrence of the hypothesis.
void dischargeAll(OpenHyps& hyps, const FormulaRef& f) { hyps.erase(printFormula(f)); }

// Returns the open hypotheses of a locally well-formed proof, or
// nullopt when some node is malformed.
std::optional<OpenHyps> checkNode(const NDProof& p) {
  auto premise = [&](std::size_t i) -> const NDProof& { return p.premises[i]; };
  auto arity = [&](std::size_t n) { return p.premises.size() == n; };

  std::vector<OpenHyps> sub;
  for (const auto& q : p.premises) {
    auto h = checkNode(q);
    if (!h) return std::nullopt;
    sub.push_back(std::move(*h));
  }
  OpenHyps open;

  switch (p.rule) {
    case NDProof::Rule::Hyp:
      if (!arity(0)) return std::nullopt;
      open[printFormula(p.conclusion)] = 1;
      return open;
    case NDProof::Rule::AndI:
      if (!arity(2) || p.conclusion->conn() != Conn::And) return std::nullopt;
      if (!equal(p.conclusion->lhs(), premise(0).conclusion)) return std::nullopt;
      if (!equal(p.conclusion->rhs(), premise(1).conclusion)) return std::nullopt;
      mergeInto(open, sub[0]);
      mergeInto(open, sub[1]);
      return open;
    case NDProof::Rule::AndE1:
    case NDProof::Rule::AndE2: {
      if (!arity(1) || premise(0).conclusion->conn() != Conn::And) return std::nullopt;
      const FormulaRef& got = p.rule == NDProof::Rule::AndE1 ? premise(0).conclusion->lhs()
                                                             : premise(0).conclusion->rhs();
      if (!equal(got, p.conclusion)) return std::nullopt;
      return sub[0];
    }
    case NDProof::Rule::ImpI:
      if (!arity(1) || p.conclusion->conn() != Conn::Imp || !p.discharge1) return std::nullopt;
      if (!equal(p.conclusion->lhs(), p.discharge1)) return std::nullopt;
      if (!equal(p.conclusion->rhs(), premise(0).conclusion)) return std::nullopt;
      open = sub[0];
      dischargeAll(open, p.discharge1);
      return open;
    case NDProof::Rule::ImpE:
      if (!arity(2) || premise(0).conclusion->conn() != Conn::Imp) return std::nullopt;
      if (!equal(premise(0).conclusion->lhs(), premise(1).conclusion)) return std::nullopt;
      if (!equal(premise(0).conclusion->rhs(), p.conclusion)) return std::nullopt;
      mergeInto(open, sub[0]);
      mergeInto(open, sub[1]);
      return open;
    case NDProof::Rule::OrI1:
    case NDProof::Rule::OrI2: {
      if (!arity(1) || p.conclusion->conn() != Conn::Or) return std::nullopt;
      const FormulaRef& want = p.rule == NDProof::Rule::OrI1 ? p.conclusion->lhs()
                                                             : p.conclusion->rhs();
      if (!equal(want, premise(0).conclusion)) return std::nullopt;
      return sub[0];
    }
    case NDProof::Rule::OrE: {
      if (!arity(3) || !p.discharge1 || !p.discharge2) return std::nullopt;
      const FormulaRef& disj = premise(0).conclusion;
      if (disj->conn() != Conn::Or) return std::nullopt;
      if (!equal(disj->lhs(), p.discharge1) || !equal(disj->rhs(), p.discharge2))
        return std::nullopt;
      if (!equal(premise(1).conclusion, p.conclusion)) return std::nullopt;
      if (!equal(premise(2).conclusion, p.conclusion)) return std::nullopt;
      mergeInto(open, sub[0]);
      OpenHyps left = sub[1];
      dischargeAll(left, p.discharge1);
      mergeInto(open, left);
      OpenHyps right = sub[2];
      dischargeAll(right, p.discharge2);
      mergeInto(open, right);
      return open;
    }
    case NDProof::Rule::BotE:
      if (!arity(1) || premise(0).conclusion->conn() != Conn::Bot) return std::nullopt;
      return sub[0];
    case NDProof::Rule::TopI:
      if (!arity(0) || p.conclusion->conn() != Conn::Top) return std::nullopt;
      return open;
  }
  return std::nullopt;
}

}  // namespace

bool ndCheck(const NDProof& p, const Sequent& s) {
  auto open = checkNode(p);
  if (!open) return false;
  if (!equal(p.conclusion, s.succedent)) return false;
  for (const auto& [hyp, count] : *open) {
    (void)count;
    bool found = false;
    for (const auto& a : s.antecedents) found = found || printFormula(a) == hyp;
    if (!found) return false;
  }
  return true;
}

namespace {

// Index of the clause a schema slot compiled to, after canonicalization
// collapsed duplicates.
std::size_t slotIndex(const AtomicRule& rule, const std::vector<std::string>& premises,
                      const std::string& conclusion) {
  RuleClause want{premises, conclusion};
  std::sort(want.premises.begin(), want.premises.end());
  for (std::size_t i = 0; i < rule.antecedents.size(); ++i)
    if (rule.antecedents[i] == want) return i;
  throw Error("schema slot not found in rule '" + printRule(rule) + "'");
}

}  // namespace

NDProof derivationToNd(const NBase& nb, const DerivationTree& d) {
  const FlatMap& fm = nb.flat;
  if (d.isRef) {
    return NDProof{NDProof::Rule::Hyp, fm.preimage(d.atom), nullptr, nullptr, {}};
  }
  const AtomicRule& rule = nb.base.rules().at(d.ruleIndex);
  const NBase::Origin& origin = nb.originOf(rule);
  const FormulaRef& xi = origin.principal;

  auto child = [&](const std::vector<std::string>& premises,
                   const std::string& conclusion) -> NDProof {
    return derivationToNd(nb, d.children.at(slotIndex(rule, premises, conclusion)));
  };
  auto name = [&](const FormulaRef& f) { return fm.floorName(f); };

  switch (origin.schema) {
    case NBase::Schema::AndI:
      return NDProof{NDProof::Rule::AndI, xi, nullptr, nullptr,
                     {child({}, name(xi->lhs())), child({}, name(xi->rhs()))}};
    case NBase::Schema::AndE1:
      return NDProof{NDProof::Rule::AndE1, xi->lhs(), nullptr, nullptr, {child({}, name(xi))}};
    case NBase::Schema::AndE2:
      return NDProof{NDProof::Rule::AndE2, xi->rhs(), nullptr, nullptr, {child({}, name(xi))}};
    case NBase::Schema::ImpI:
      return NDProof{NDProof::Rule::ImpI, xi, xi->lhs(), nullptr,
                     {child({name(xi->lhs())}, name(xi->rhs()))}};
    case NBase::Schema::ImpE:
      return NDProof{NDProof::Rule::ImpE, xi->rhs(), nullptr, nullptr,
                     {child({}, name(xi)), child({}, name(xi->lhs()))}};
    case NBase::Schema::OrI1:
      return NDProof{NDProof::Rule::OrI1, xi, nullptr, nullptr, {child({}, name(xi->lhs()))}};
    case NBase::Schema::OrI2:
      return NDProof{NDProof::Rule::OrI2, xi, nullptr, nullptr, {child({}, name(xi->rhs()))}};
    case NBase::Schema::OrE: {
      FormulaRef target = fm.preimage(origin.targetAtom);
      return NDProof{NDProof::Rule::OrE, target, xi->lhs(), xi->rhs(),
                     {child({}, name(xi)),
                      child({name(xi->lhs())}, origin.targetAtom),
                      child({name(xi->rhs())}, origin.targetAtom)}};
    }
    case NBase::Schema::BotE:
      return NDProof{NDProof::Rule::BotE, fm.preimage(origin.targetAtom), nullptr, nullptr,
                     {child({}, name(xi))}};
    case NBase::Schema::TopI:
      return NDProof{NDProof::Rule::TopI, xi, nullptr, nullptr, {}};
  }
  throw Error("unreachable schema");
}

}  // namespace pts
