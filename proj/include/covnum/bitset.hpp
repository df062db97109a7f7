#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace covnum {

// Dense bitset over a fixed-size universe. Supports the handful of set
// operations the cover machinery needs without allocating in inner loops.
class DynBitset {
public:
  DynBitset() = default;
  explicit DynBitset(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  void set(std::size_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (uint64_t w : words_) c += std::size_t(__builtin_popcountll(w));
    return c;
  }
  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // index of lowest set bit, or npos
  static constexpr std::size_t npos = ~std::size_t(0);
  std::size_t find_first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * 64 + std::size_t(__builtin_ctzll(words_[k]));
    return npos;
  }
  std::size_t find_next(std::size_t i) const {
    ++i;
    if (i >= size_) return npos;
    std::size_t k = i >> 6;
    uint64_t w = words_[k] & (~uint64_t(0) << (i & 63));
    if (w) return k * 64 + std::size_t(__builtin_ctzll(w));
    for (++k; k < words_.size(); ++k)
      if (words_[k]) return k * 64 + std::size_t(__builtin_ctzll(words_[k]));
    return npos;
  }

  DynBitset& operator|=(const DynBitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  DynBitset& operator-=(const DynBitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
  friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
  friend DynBitset operator-(DynBitset a, const DynBitset& b) { return a -= b; }

  bool operator==(const DynBitset&) const = default;

  bool is_subset_of(const DynBitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool intersects(const DynBitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }
  std::size_t count_and(const DynBitset& o) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += std::size_t(__builtin_popcountll(words_[k] & o.words_[k]));
    return c;
  }
  // |this & ~o|
  std::size_t count_minus(const DynBitset& o) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += std::size_t(__builtin_popcountll(words_[k] & ~o.words_[k]));
    return c;
  }

  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

private:
  std::size_t size_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace covnum
