#pragma once

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "pts/bitset.hpp"
#include "pts/formula.hpp"
#include "pts/heyting.hpp"
#include "pts/poset.hpp"

namespace pts {

// Closure operator candidate on the up-set algebra of a poset. The map
// is given by a function and tabulated on demand; tabulate() (and the
// law checker) enumerate all up-sets, so they are for small posets only.
// The intended laws: order-preserving, increasing, idempotent and
// ∧-preserving.
class Nucleus {
public:
  using Fn = std::function<Bits(const Bits&)>;

  Nucleus(const Poset& p, std::string name, Fn fn)
      : poset_(&p), name_(std::move(name)), fn_(std::move(fn)),
        memo_(std::make_shared<std::unordered_map<Bits, Bits, BitsHash>>()) {}

  const Poset& poset() const { return *poset_; }
  const std::string& name() const { return name_; }

  // Validates the input is up-closed; memoized.
  const Bits& apply(const Bits& upset) const;

  // Full table over every up-set of the poset.
  std::vector<std::pair<Bits, Bits>> tabulate() const;

private:
  const Poset* poset_;
  std::string name_;
  Fn fn_;
  std::shared_ptr<std::unordered_map<Bits, Bits, BitsHash>> memo_;
};

Nucleus identityNucleus(const Poset& p);
// j_h = λa. (a → h) → h.
Nucleus nucleusFromElement(const Poset& p, const Bits& h);
// Pointwise meet; all components must live on the same poset.
Nucleus meetNuclei(const Poset& p, std::vector<Nucleus> components);
// J = ⋀ over atoms b of j_{σ_deriv(b)}. The atom universe must be nonempty.
Nucleus sandqvistNucleus(const WorldUniverse& u, const Poset& p);

struct NucleusLawReport {
  bool orderPreserving = true;
  bool increasing = true;
  bool idempotent = true;
  bool meetPreserving = true;
  // First counterexample per failed law, as printable text.
  std::vector<std::string> witnesses;

  bool allPass() const {
    return orderPreserving && increasing && idempotent && meetPreserving;
  }
};

// Exhaustive check of the four laws over all up-set pairs.
NucleusLawReport checkNucleusLaws(const Poset& p, const Nucleus& j);

// Fixpoint subalgebra H_j: meets and implication inherited, join as
// j of the union, bottom as j(∅).
struct FixSubalgebra {
  const Poset* poset;
  std::vector<Bits> carrier;  // deterministic order

  bool contains(const Bits& u) const;
};

FixSubalgebra fixSubalgebra(const Poset& p, const Nucleus& j);

// j-interpretation: atoms via j∘σ_deriv, ⊤/∧/⊃ inherited from the
// algebra, ⊥ as j(∅), ∨ as j of the union. Memoizes per formula.
class JInterp {
public:
  JInterp(const WorldUniverse& u, const Poset& p, const Nucleus& j)
      : uni_(u), poset_(p), j_(j) {}

  const Bits& denote(const FormulaRef& f);

private:
  const WorldUniverse& uni_;
  const Poset& poset_;
  const Nucleus& j_;
  std::unordered_map<std::string, Bits> memo_;

  Bits compute(const FormulaRef& f);
};

inline Bits interpretJ(const WorldUniverse& u, const Poset& p, const Nucleus& j,
                       const FormulaRef& f) {
  return JInterp(u, p, j).denote(f);
}

}  // namespace pts
