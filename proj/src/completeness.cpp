#include "pts/completeness.hpp"

#include <algorithm>

#include "pts/derivation.hpp"
#include "pts/error.hpp"
#include "pts/support.hpp"
#include "pts/universe.hpp"

namespace pts {

namespace {

std::vector<std::string> flatAntecedents(const NBase& nb) {
  std::vector<std::string> names;
  for (const auto& f : nb.sequent.antecedents) names.push_back(nb.flat.floorName(f));
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

}  // namespace

bool proveViaBase(const Sequent& s) {
  NBase nb = buildBaseN(s);
  return derives(nb.base, flatAntecedents(nb), nb.flat.floorName(s.succedent));
}

std::optional<BaseProofWitness> proveViaBaseWitness(const Sequent& s) {
  NBase nb = buildBaseN(s);
  auto tree = deriveTree(nb.base, flatAntecedents(nb), nb.flat.floorName(s.succedent));
  if (!tree) return std::nullopt;
  NDProof proof = derivationToNd(nb, *tree);
  return BaseProofWitness{std::move(nb), std::move(*tree), std::move(proof)};
}

DaggerReport checkDagger(const Sequent& s, const std::vector<AtomicRule>& extraRules) {
  NBase nb = buildBaseN(s);

  std::vector<AtomicRule> ruleUniverse = nb.base.rules();
  std::size_t nBaseRules = ruleUniverse.size();
  for (AtomicRule r : extraRules) {
    r.canonicalize();
    auto mentions = [&](const std::string& a) {
      return std::find(nb.flat.atomStar.begin(), nb.flat.atomStar.end(), a) !=
             nb.flat.atomStar.end();
    };
    if (!mentions(r.conclusion))
      throw Error("extra rule mentions atom '" + r.conclusion + "' outside At*");
    for (const auto& c : r.antecedents) {
      if (!mentions(c.conclusion))
        throw Error("extra rule mentions atom '" + c.conclusion + "' outside At*");
      for (const auto& p : c.premises)
        if (!mentions(p)) throw Error("extra rule mentions atom '" + p + "' outside At*");
    }
    if (std::find(ruleUniverse.begin(), ruleUniverse.end(), r) == ruleUniverse.end())
      ruleUniverse.push_back(std::move(r));
  }

  std::size_t nExtras = ruleUniverse.size() - nBaseRules;
  if (nExtras > 20) throw Error("dagger check refused: more than 2^20 worlds");
  if (ruleUniverse.size() > 64) throw Error("rule universe exceeds 64 rules");

  std::uint64_t nMask = (nBaseRules == 64) ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << nBaseRules) - 1;
  std::vector<std::uint64_t> masks;
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << nExtras); ++e)
    masks.push_back(nMask | (e << nBaseRules));

  WorldUniverse w =
      WorldUniverse::explicitFamily(nb.flat.atomStar, std::move(ruleUniverse), std::move(masks));
  SupportEngine engine(w);

  DaggerReport report;
  report.worlds = w.worldCount();
  for (const auto& xi : nb.flat.subformulaOrder) {
    ++report.formulasChecked;
    FormulaRef flatAtom = Formula::atom(nb.flat.floorName(xi));
    const Bits lhs = engine.supportSet(flatAtom);
    const Bits rhs = engine.supportSet(xi);
    if (lhs == rhs) continue;
    for (std::size_t b = 0; b < w.worldCount(); ++b)
      if (lhs.test(b) != rhs.test(b))
        report.counterexamples.push_back(
            {w.worldName(b), printFormula(xi), lhs.test(b), rhs.test(b)});
  }
  return report;
}

}  // namespace pts
