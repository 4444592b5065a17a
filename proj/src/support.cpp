#include "pts/support.hpp"

#include "pts/error.hpp"

namespace pts {

const Bits& SupportEngine::supportSet(const FormulaRef& f) {
  std::string key = printFormula(f);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Bits value = compute(f);
  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

Bits SupportEngine::conditionAbove(const Bits& ifIn, const Bits& thenIn) const {
  std::size_t n = uni_.worldCount();
  Bits out(n);
  for (std::size_t b = 0; b < n; ++b) {
    bool holds = uni_.forEachAbove(b, [&](std::size_t c) {
      return !ifIn.test(c) || thenIn.test(c);  // keep scanning while satisfied
    });
    if (holds) out.set(b);
  }
  return out;
}

Bits SupportEngine::compute(const FormulaRef& f) {
  std::size_t n = uni_.worldCount();
  switch (f->conn()) {
    case Conn::Atom:
      return uni_.derivSet(f->atomName());
    case Conn::Top:
      return Bits::all(n);
    case Conn::Bot: {
      // Supports every atom of the universe.
      Bits out = Bits::all(n);
      for (const auto& a : uni_.atoms()) out &= uni_.derivSet(a);
      return out;
    }
    case Conn::And:
      return supportSet(f->lhs()) & supportSet(f->rhs());
    case Conn::Imp:
      // (Inf) with singleton Θ = {lhs}.
      return conditionAbove(supportSet(f->lhs()), supportSet(f->rhs()));
    case Conn::Or: {
      const Bits& sl = supportSet(f->lhs());
      const Bits& sr = supportSet(f->rhs());
      Bits out = Bits::all(n);
      for (const auto& a : uni_.atoms()) {
        const Bits& sa = uni_.derivSet(a);
        Bits leftInfers = conditionAbove(sl, sa);   // {C | φ ⊩_C a}
        Bits rightInfers = conditionAbove(sr, sa);  // {C | ψ ⊩_C a}
        // U = {C | (φ ⊩_C a and ψ ⊩_C a) → C supports a}
        Bits u = (leftInfers & rightInfers).complement() | sa;
        // {B | ∀C ⊇ B: C ∈ U}
        out &= conditionAbove(u.complement(), Bits(n));
      }
      return out;
    }
  }
  throw Error("unreachable formula kind");
}

bool SupportEngine::supports(std::size_t world, const FormulaRef& f) {
  if (world >= uni_.worldCount()) throw Error("world index out of range");
  return supportSet(f).test(world);
}

bool SupportEngine::supports(const Base& b, const FormulaRef& f) {
  auto idx = uni_.indexOfBase(b);
  if (!idx) throw Error("base is not a member of the world universe");
  return supports(*idx, f);
}

bool SupportEngine::infers(std::size_t world, const std::vector<FormulaRef>& theta,
                           const FormulaRef& f) {
  if (world >= uni_.worldCount()) throw Error("world index out of range");
  const Bits& target = supportSet(f);
  std::vector<const Bits*> premises;
  premises.reserve(theta.size());
  for (const auto& t : theta) premises.push_back(&supportSet(t));
  return uni_.forEachAbove(world, [&](std::size_t c) {
    for (const Bits* p : premises)
      if (!p->test(c)) return true;  // premise fails, world vacuously fine
    return target.test(c);
  });
}

bool SupportEngine::valid(const std::vector<FormulaRef>& gamma, const FormulaRef& f) {
  for (std::size_t b = 0; b < uni_.worldCount(); ++b)
    if (!infers(b, gamma, f)) return false;
  return true;
}

}  // namespace pts
