#include "pts/poset.hpp"

#include <algorithm>

#include "pts/error.hpp"

namespace pts {

Poset Poset::subsetLattice(unsigned bits) {
  if (bits > 20) throw Error("subset-lattice poset cap is 20 bits");
  Poset p;
  p.mode_ = Mode::Lattice;
  p.bits_ = bits;
  p.size_ = std::size_t{1} << bits;
  return p;
}

Poset Poset::fromMasks(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  Poset p;
  p.mode_ = Mode::Masks;
  p.size_ = masks.size();
  p.masks_ = std::move(masks);
  p.cones_.resize(p.size_);
  p.ideals_.resize(p.size_);
  for (std::size_t i = 0; i < p.size_; ++i)
    for (std::size_t j = 0; j < p.size_; ++j)
      if ((p.masks_[i] & ~p.masks_[j]) == 0) {
        p.cones_[i].push_back(j);
        p.ideals_[j].push_back(i);
      }
  return p;
}

Poset Poset::fromRelation(std::size_t n,
                          const std::function<bool(std::size_t, std::size_t)>& leq) {
  if (n > 512) throw Error("relation posets are capped at 512 elements");
  Poset p;
  p.mode_ = Mode::Relation;
  p.size_ = n;
  p.leqRows_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq(i, j)) p.leqRows_[i].set(j);
  // Partial-order axioms.
  for (std::size_t i = 0; i < n; ++i)
    if (!p.leqRows_[i].test(i)) throw Error("relation is not reflexive");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && p.leqRows_[i].test(j) && p.leqRows_[j].test(i))
        throw Error("relation is not antisymmetric");
      if (p.leqRows_[i].test(j) && !p.leqRows_[j].subsetOf(p.leqRows_[i]))
        throw Error("relation is not transitive");
    }
  p.cones_.resize(n);
  p.ideals_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    p.leqRows_[i].forEach([&](std::size_t j) {
      p.cones_[i].push_back(j);
      p.ideals_[j].push_back(i);
    });
  return p;
}

bool Poset::leq(std::size_t a, std::size_t b) const {
  switch (mode_) {
    case Mode::Lattice: return (a & ~b) == 0;
    case Mode::Masks: return (masks_[a] & ~masks_[b]) == 0;
    case Mode::Relation: return leqRows_[a].test(b);
  }
  return false;
}

Bits Poset::downClosure(const Bits& s) const {
  Bits out = s;
  if (mode_ == Mode::Lattice) {
    // Superset-sum over the subset lattice, one bit at a time.
    for (unsigned b = 0; b < bits_; ++b) {
      std::uint64_t bit = std::uint64_t{1} << b;
      for (std::size_t m = 0; m < size_; ++m)
        if (!(m & bit) && out.test(m | bit)) out.set(m);
    }
    return out;
  }
  for (std::size_t i = 0; i < size_; ++i) {
    if (out.test(i)) continue;
    for (std::size_t j : cones_[i])
      if (s.test(j)) {
        out.set(i);
        break;
      }
  }
  return out;
}

Bits Poset::upClosure(const Bits& s) const {
  Bits out = s;
  if (mode_ == Mode::Lattice) {
    for (unsigned b = 0; b < bits_; ++b) {
      std::uint64_t bit = std::uint64_t{1} << b;
      for (std::size_t m = 0; m < size_; ++m)
        if (!(m & bit) && out.test(m)) out.set(m | bit);
    }
    return out;
  }
  for (std::size_t i = 0; i < size_; ++i) {
    if (out.test(i)) continue;
    for (std::size_t j : ideals_[i])
      if (s.test(j)) {
        out.set(i);
        break;
      }
  }
  return out;
}

bool Poset::isUpClosed(const Bits& s) const {
  if (s.universe() != size_) return false;
  return upClosure(s) == s;
}

std::vector<Bits> enumerateUpSets(const Poset& p) {
  if (p.size() > 20) throw Error("up-set enumeration is capped at 20-element posets");
  std::vector<Bits> out;
  std::size_t n = p.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Bits s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (m & (std::uint64_t{1} << i)) s.set(i);
    if (p.isUpClosed(s)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace pts
