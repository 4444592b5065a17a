#include "pts/derivation.hpp"

#include <algorithm>

#include "pts/error.hpp"

namespace pts {

Saturation::Saturation(const Base& b, const std::vector<Bits>& seedContexts)
    : base_(b), nAtoms_(b.atoms().size()) {
  for (const auto& r : b.rules()) {
    Rule cr;
    cr.conclusion = b.atomIndex(r.conclusion);
    for (const auto& c : r.antecedents) {
      Clause cc{Bits(nAtoms_), b.atomIndex(c.conclusion)};
      for (const auto& p : c.premises) cc.premises.set(b.atomIndex(p));
      cr.clauses.push_back(std::move(cc));
    }
    rules_.push_back(std::move(cr));
  }

  // Close the seed contexts under unions with premise sets.
  for (const auto& s : seedContexts) internCtx(s);
  for (std::size_t i = 0; i < ctxs_.size(); ++i) {
    for (const auto& r : rules_)
      for (const auto& c : r.clauses) internCtx(ctxs_[i] | c.premises);
  }

  derived_.assign(ctxs_.size(), Bits(nAtoms_));
  just_.assign(ctxs_.size(), std::vector<int>(nAtoms_, -2));
  for (std::size_t c = 0; c < ctxs_.size(); ++c) {
    derived_[c] = ctxs_[c];  // (Ref)
    ctxs_[c].forEach([&](std::size_t a) { just_[c][a] = -1; });
  }
  saturate();
}

std::size_t Saturation::internCtx(const Bits& ctx) {
  auto it = ctxId_.find(ctx);
  if (it != ctxId_.end()) return it->second;
  std::size_t id = ctxs_.size();
  ctxs_.push_back(ctx);
  ctxId_.emplace(ctx, id);
  return id;
}

void Saturation::saturate() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ri = 0; ri < rules_.size(); ++ri) {
      const Rule& r = rules_[ri];
      for (std::size_t c = 0; c < ctxs_.size(); ++c) {
        if (derived_[c].test(r.conclusion)) continue;
        bool ok = true;
        for (const auto& cl : r.clauses) {
          std::size_t child = ctxId_.at(ctxs_[c] | cl.premises);
          if (!derived_[child].test(cl.conclusion)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          derived_[c].set(r.conclusion);
          just_[c][r.conclusion] = static_cast<int>(ri);
          changed = true;
        }
      }
    }
  }
}

bool Saturation::derivable(const Bits& context, std::size_t atomIdx) const {
  return derived_[ctxId_.at(context)].test(atomIdx);
}

DerivationTree Saturation::buildTree(std::size_t ctx, std::size_t atom) const {
  DerivationTree t;
  t.atom = base_.atoms()[atom];
  ctxs_[ctx].forEach([&](std::size_t a) { t.context.push_back(base_.atoms()[a]); });
  int j = just_[ctx][atom];
  if (j == -1) return t;  // Ref
  t.isRef = false;
  t.ruleIndex = static_cast<std::size_t>(j);
  const Rule& r = rules_[t.ruleIndex];
  for (const auto& cl : r.clauses) {
    std::size_t child = ctxId_.at(ctxs_[ctx] | cl.premises);
    t.children.push_back(buildTree(child, cl.conclusion));
  }
  return t;
}

std::optional<DerivationTree> Saturation::tree(const Bits& context, std::size_t atomIdx) const {
  std::size_t c = ctxId_.at(context);
  if (!derived_[c].test(atomIdx)) return std::nullopt;
  return buildTree(c, atomIdx);
}

Bits Saturation::emptyContextAtoms() const {
  auto it = ctxId_.find(Bits(nAtoms_));
  if (it == ctxId_.end()) throw Error("empty context was not seeded");
  return derived_[it->second];
}

bool derives(const Base& b, const std::vector<std::string>& context, const std::string& goal) {
  Bits ctx = b.atomSet(context);
  Saturation sat(b, {ctx});
  return sat.derivable(ctx, b.atomIndex(goal));
}

std::optional<DerivationTree> deriveTree(const Base& b, const std::vector<std::string>& context,
                                         const std::string& goal) {
  Bits ctx = b.atomSet(context);
  Saturation sat(b, {ctx});
  return sat.tree(ctx, b.atomIndex(goal));
}

bool checkDerivationTree(const Base& b, const DerivationTree& t,
                         const std::vector<std::string>& context, const std::string& goal) {
  Bits ctx = b.atomSet(context);
  if (t.atom != goal) return false;
  if (b.atomSet(t.context) != ctx) return false;
  if (t.isRef) return ctx.test(b.atomIndex(t.atom)) && t.children.empty();
  if (t.ruleIndex >= b.rules().size()) return false;
  const AtomicRule& r = b.rules()[t.ruleIndex];
  if (r.conclusion != t.atom) return false;
  if (t.children.size() != r.antecedents.size()) return false;
  for (std::size_t i = 0; i < r.antecedents.size(); ++i) {
    std::vector<std::string> childCtx = t.context;
    for (const auto& p : r.antecedents[i].premises) childCtx.push_back(p);
    std::sort(childCtx.begin(), childCtx.end());
    childCtx.erase(std::unique(childCtx.begin(), childCtx.end()), childCtx.end());
    if (!checkDerivationTree(b, t.children[i], childCtx, r.antecedents[i].conclusion))
      return false;
  }
  return true;
}

}  // namespace pts
