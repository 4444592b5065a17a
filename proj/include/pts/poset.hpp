#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pts/bitset.hpp"

namespace pts {

// Finite poset. Three storage modes: the full subset lattice over k bits
// (elements are the 2^k masks, order is mask inclusion, used for
// all-subsets world families), an explicit family of masks under
// inclusion, and an arbitrary relation (validated to be a partial
// order). Up-sets over the poset are Bits over element indices.
class Poset {
public:
  static Poset subsetLattice(unsigned bits);
  static Poset fromMasks(std::vector<std::uint64_t> masks);
  static Poset fromRelation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const { return size_; }
  bool leq(std::size_t a, std::size_t b) const;

  bool isUpClosed(const Bits& s) const;
  Bits upClosure(const Bits& s) const;    // {j | ∃i ≤ j, i ∈ s}
  Bits downClosure(const Bits& s) const;  // {i | ∃j ≥ i, j ∈ s}
  // {i | ∀j ≥ i: j ∈ s}
  Bits allAbove(const Bits& s) const { return downClosure(s.complement()).complement(); }

  Bits full() const { return Bits::all(size_); }

private:
  enum class Mode { Lattice, Masks, Relation };
  Mode mode_ = Mode::Relation;
  std::size_t size_ = 0;
  unsigned bits_ = 0;                            // Lattice
  std::vector<std::uint64_t> masks_;             // Masks
  std::vector<std::vector<std::size_t>> cones_;  // Masks/Relation: j ≥ i
  std::vector<std::vector<std::size_t>> ideals_; // Masks/Relation: j ≤ i
  std::vector<Bits> leqRows_;                    // Relation: row i = {j | i ≤ j}
};

// All up-closed subsets, in a deterministic order. Throws if the poset
// has more than 20 elements (enumeration is meant for small posets).
std::vector<Bits> enumerateUpSets(const Poset& p);

}  // namespace pts
