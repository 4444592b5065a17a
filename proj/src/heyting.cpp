#include "pts/heyting.hpp"

#include <unordered_map>

#include "pts/error.hpp"

namespace pts {

const Bits& CanonicalInterp::at(const std::string& atom) const {
  auto it = sigma.find(atom);
  if (it == sigma.end()) throw Error("interpretation is missing atom '" + atom + "'");
  return it->second;
}

Poset posetOf(const WorldUniverse& u) {
  if (u.isAllSubsets()) return Poset::subsetLattice(static_cast<unsigned>(u.rules().size()));
  std::vector<std::uint64_t> masks;
  masks.reserve(u.worldCount());
  for (std::size_t w = 0; w < u.worldCount(); ++w) masks.push_back(u.worldMask(w));
  return Poset::fromMasks(std::move(masks));
}

CanonicalInterp derivabilityInterp(const WorldUniverse& u) {
  CanonicalInterp interp;
  for (const auto& a : u.atoms()) interp.sigma.emplace(a, u.derivSet(a));
  return interp;
}

Bits heytingImp(const Poset& p, const Bits& u, const Bits& v) {
  if (!p.isUpClosed(u) || !p.isUpClosed(v)) throw Error("heytingImp requires up-closed inputs");
  return p.allAbove(u.complement() | v);
}

namespace {

struct KripkeEval {
  const WorldUniverse& uni;
  std::unordered_map<std::string, Bits> memo;

  const Bits& eval(const FormulaRef& f) {
    std::string key = printFormula(f);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Bits v = compute(f);
    return memo.emplace(std::move(key), std::move(v)).first->second;
  }

  Bits compute(const FormulaRef& f) {
    std::size_t n = uni.worldCount();
    switch (f->conn()) {
      case Conn::Atom: return uni.derivSet(f->atomName());
      case Conn::Top: return Bits::all(n);
      case Conn::Bot: return Bits(n);
      case Conn::And: return eval(f->lhs()) & eval(f->rhs());
      case Conn::Or: return eval(f->lhs()) | eval(f->rhs());
      case Conn::Imp: {
        const Bits& sl = eval(f->lhs());
        const Bits& sr = eval(f->rhs());
        Bits out(n);
        for (std::size_t b = 0; b < n; ++b) {
          bool holds = uni.forEachAbove(b, [&](std::size_t c) {
            return !sl.test(c) || sr.test(c);
          });
          if (holds) out.set(b);
        }
        return out;
      }
    }
    throw Error("unreachable formula kind");
  }
};

}  // namespace

Bits denoteKripke(const WorldUniverse& u, const FormulaRef& f) {
  KripkeEval ev{u, {}};
  return ev.eval(f);
}

Bits denoteAlgebraic(const Poset& p, const CanonicalInterp& sigma, const FormulaRef& f) {
  switch (f->conn()) {
    case Conn::Atom: {
      const Bits& s = sigma.at(f->atomName());
      if (!p.isUpClosed(s)) throw Error("atom interpretation is not up-closed");
      return s;
    }
    case Conn::Top: return p.full();
    case Conn::Bot: return Bits(p.size());
    case Conn::And: return denoteAlgebraic(p, sigma, f->lhs()) & denoteAlgebraic(p, sigma, f->rhs());
    case Conn::Or: return denoteAlgebraic(p, sigma, f->lhs()) | denoteAlgebraic(p, sigma, f->rhs());
    case Conn::Imp:
      return heytingImp(p, denoteAlgebraic(p, sigma, f->lhs()), denoteAlgebraic(p, sigma, f->rhs()));
  }
  throw Error("unreachable formula kind");
}

}  // namespace pts
