#include "pts/equiv.hpp"

#include <functional>
#include <unordered_set>

#include "pts/error.hpp"
#include "pts/heyting.hpp"
#include "pts/nucleus.hpp"
#include "pts/support.hpp"

namespace pts {

namespace {

struct Layered {
  FormulaRef formula;
  Bits lhs, rhs;
  int depth;
};

EquivReport runEnumeration(const WorldUniverse& u, int maxDepth, std::size_t signatureCap,
                           const std::function<Bits(const FormulaRef&)>& evalLhs,
                           const std::function<Bits(const FormulaRef&)>& evalRhs) {
  EquivReport report;
  report.universeWorlds = u.worldCount();

  std::vector<Layered> reps;
  std::unordered_set<std::string> seen;

  auto consider = [&](const FormulaRef& f, int depth) {
    Bits lhs = evalLhs(f);
    Bits rhs = evalRhs(f);
    if (lhs != rhs) {
      for (std::size_t w = 0; w < u.worldCount() && report.counterexamples.size() < 10; ++w)
        if (lhs.test(w) != rhs.test(w))
          report.counterexamples.push_back(
              {printFormula(f), u.worldName(w), lhs.test(w), rhs.test(w)});
    }
    ++report.formulasChecked;
    std::string sig = lhs.str() + "/" + rhs.str();
    if (seen.insert(std::move(sig)).second) {
      if (reps.size() >= signatureCap) throw Error("signature cap exceeded in equivalence check");
      reps.push_back({f, std::move(lhs), std::move(rhs), depth});
    }
  };

  consider(Formula::top(), 0);
  consider(Formula::bot(), 0);
  for (const auto& a : u.atoms()) consider(Formula::atom(a), 0);

  for (int depth = 1; depth <= maxDepth; ++depth) {
    std::size_t before = reps.size();
    for (std::size_t i = 0; i < before; ++i) {
      for (std::size_t j = 0; j < before; ++j) {
        // New formulas of exactly this depth need one child of depth-1.
        if (std::max(reps[i].depth, reps[j].depth) != depth - 1) continue;
        consider(Formula::conj(reps[i].formula, reps[j].formula), depth);
        consider(Formula::disj(reps[i].formula, reps[j].formula), depth);
        consider(Formula::imp(reps[i].formula, reps[j].formula), depth);
      }
    }
  }
  return report;
}

}  // namespace

EquivReport checkSupportVsJ(const WorldUniverse& u, int maxDepth, std::size_t signatureCap) {
  SupportEngine engine(u);
  Poset poset = posetOf(u);
  Nucleus j = sandqvistNucleus(u, poset);
  JInterp jinterp(u, poset, j);
  return runEnumeration(
      u, maxDepth, signatureCap,
      [&](const FormulaRef& f) { return engine.supportSet(f); },
      [&](const FormulaRef& f) { return jinterp.denote(f); });
}

EquivReport checkKripkeVsAlgebraic(const WorldUniverse& u, int maxDepth,
                                   std::size_t signatureCap) {
  Poset poset = posetOf(u);
  CanonicalInterp sigma = derivabilityInterp(u);
  return runEnumeration(
      u, maxDepth, signatureCap,
      [&](const FormulaRef& f) { return denoteKripke(u, f); },
      [&](const FormulaRef& f) { return denoteAlgebraic(poset, sigma, f); });
}

}  // namespace pts
