#include "pts/g4ip.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace pts {

namespace {

struct Prover {
  std::unordered_map<std::string, bool> memo;

  static std::string key(const std::vector<FormulaRef>& ctx, const FormulaRef& goal) {
    std::vector<std::string> parts;
    parts.reserve(ctx.size());
    for (const auto& f : ctx) parts.push_back(printFormula(f));
    std::sort(parts.begin(), parts.end());
    std::string k;
    for (const auto& p : parts) {
      k += p;
      k += ';';
    }
    k += "|-";
    k += printFormula(goal);
    return k;
  }

  static bool contains(const std::vector<FormulaRef>& ctx, const Formula& f) {
    for (const auto& g : ctx)
      if (equal(*g, f)) return true;
    return false;
  }

  bool prove(std::vector<FormulaRef> ctx, FormulaRef goal) {
    // Invertible phase: saturate left rules, keep the context small.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        const FormulaRef f = ctx[i];
        switch (f->conn()) {
          case Conn::Bot:
            return true;
          case Conn::Top:
            ctx.erase(ctx.begin() + i);
            changed = true;
            break;
          case Conn::And:
            ctx.erase(ctx.begin() + i);
            ctx.push_back(f->lhs());
            ctx.push_back(f->rhs());
            changed = true;
            break;
          case Conn::Imp: {
            const FormulaRef& head = f->lhs();
            if (head->conn() == Conn::Top) {
              ctx.erase(ctx.begin() + i);
              ctx.push_back(f->rhs());
              changed = true;
            } else if (head->conn() == Conn::Bot) {
              ctx.erase(ctx.begin() + i);
              changed = true;
            } else if (head->conn() == Conn::And) {
              ctx.erase(ctx.begin() + i);
              ctx.push_back(Formula::imp(head->lhs(), Formula::imp(head->rhs(), f->rhs())));
              changed = true;
            } else if (head->conn() == Conn::Or) {
              ctx.erase(ctx.begin() + i);
              ctx.push_back(Formula::imp(head->lhs(), f->rhs()));
              ctx.push_back(Formula::imp(head->rhs(), f->rhs()));
              changed = true;
            } else if (head->conn() == Conn::Atom && contains(ctx, *head)) {
              ctx.erase(ctx.begin() + i);
              ctx.push_back(f->rhs());
              changed = true;
            }
            break;
          }
          default:
            break;
        }
        if (changed) break;
      }
    }

    if (goal->conn() == Conn::Top) return true;
    if (goal->isAtom() && contains(ctx, *goal)) return true;

    std::string k = key(ctx, goal);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    // The calculus terminates on a multiset ordering, so a plain
    // completed-result memo is sound.
    bool result = search(ctx, goal);
    memo.emplace(std::move(k), result);
    return result;
  }

  bool search(const std::vector<FormulaRef>& ctx, const FormulaRef& goal) {
    // Remaining invertible right rules.
    if (goal->conn() == Conn::And)
      return prove(ctx, goal->lhs()) && prove(ctx, goal->rhs());
    if (goal->conn() == Conn::Imp) {
      std::vector<FormulaRef> ext = ctx;
      ext.push_back(goal->lhs());
      return prove(std::move(ext), goal->rhs());
    }
    // Invertible left disjunction.
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      if (ctx[i]->conn() != Conn::Or) continue;
      std::vector<FormulaRef> left = ctx, right = ctx;
      left[i] = ctx[i]->lhs();
      right[i] = ctx[i]->rhs();
      return prove(std::move(left), goal) && prove(std::move(right), goal);
    }

    // Choice phase.
    if (goal->conn() == Conn::Or) {
      if (prove(ctx, goal->lhs()) || prove(ctx, goal->rhs())) return true;
    }
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const FormulaRef& f = ctx[i];
      if (f->conn() != Conn::Imp || f->lhs()->conn() != Conn::Imp) continue;
      const FormulaRef& inner = f->lhs();  // φ ⊃ ψ
      std::vector<FormulaRef> rest;
      for (std::size_t j = 0; j < ctx.size(); ++j)
        if (j != i) rest.push_back(ctx[j]);
      std::vector<FormulaRef> first = rest;
      first.push_back(Formula::imp(inner->rhs(), f->rhs()));
      if (!prove(std::move(first), inner)) continue;
      std::vector<FormulaRef> second = rest;
      second.push_back(f->rhs());
      if (prove(std::move(second), goal)) return true;
    }
    return false;
  }
};

}  // namespace

bool g4ipProvable(std::vector<FormulaRef> gamma, FormulaRef goal) {
  Prover p;
  return p.prove(std::move(gamma), std::move(goal));
}

bool g4ipProvable(const Sequent& s) { return g4ipProvable(s.antecedents, s.succedent); }

}  // namespace pts
