#pragma once

// Fixed-universe bitset used for event sets. The universe is the carrier of
// one event structure, so all sets taking part in an operation share a size.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace esgame {

class Bits {
public:
  Bits() = default;
  explicit Bits(std::size_t universe)
      : n_(universe), w_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }

  bool test(std::size_t i) const {
    return (w_[i >> 6] >> (i & 63)) & std::uint64_t{1};
  }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

  // a \ b
  friend Bits minus(Bits a, const Bits& b) {
    for (std::size_t k = 0; k < a.w_.size(); ++k) a.w_[k] &= ~b.w_[k];
    return a;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  template <class F>
  void for_each(F f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(k * 64 + b));
        w &= w - 1;
      }
    }
  }

  struct Hash {
    std::size_t operator()(const Bits& b) const {
      std::uint64_t h = 1469598103934665603ull ^ b.n_;
      for (auto w : b.w_) {
        h ^= w;
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Canonical order on event sets of one structure: by size, then by the
// lexicographic order of the sorted index lists. Indices follow id order,
// so this is stable across runs.
inline bool canonical_less(const Bits& a, const Bits& b) {
  std::size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  auto ia = a.indices(), ib = b.indices();
  return ia < ib;
}

}  // namespace esgame
