#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pts {

// Subset of a fixed finite universe [0, n). Atom sets, rule masks and
// world sets are all represented this way.
class Bits {
public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bits all(std::size_t n) {
    Bits b(n);
    for (auto& w : b.w_) w = ~0ull;
    b.trim();
    return b;
  }

  std::size_t universe() const { return n_; }

  bool test(std::size_t i) const {
    assert(i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  bool subsetOf(const Bits& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bits& operator|=(const Bits& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits minus(const Bits& o) const {
    assert(n_ == o.n_);
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
    return r;
  }
  Bits complement() const {
    Bits r = *this;
    for (auto& w : r.w_) w = ~w;
    r.trim();
    return r;
  }

  friend Bits operator|(Bits a, const Bits& b) {
    a |= b;
    return a;
  }
  friend Bits operator&(Bits a, const Bits& b) {
    a &= b;
    return a;
  }
  friend bool operator==(const Bits&, const Bits&) = default;

  template <class F>
  void forEach(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        f(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    forEach([&](std::size_t i) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    });
    s += "}";
    return s;
  }

  std::size_t hashValue() const {
    std::size_t h = 1469598103934665603ull ^ n_;
    for (auto w : w_) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;

  void trim() {
    if (n_ % 64 != 0 && !w_.empty())
      w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hashValue(); }
};

}  // namespace pts
