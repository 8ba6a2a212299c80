#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace cdlat {

// Fixed-capacity dynamic bit vector used for element sets of a single group.
// All binary operations require both operands to have the same capacity.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::uint32_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::uint32_t capacity() const { return nbits_; }

  bool test(std::uint32_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::uint32_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::uint32_t count() const {
    std::uint32_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  // true iff other is a subset of *this
  bool contains(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (other.words_[i] & ~words_[i]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  bool operator==(const Bitset&) const = default;

  // Canonical total order on equal-capacity sets: compare the word arrays as
  // one big unsigned integer. Used wherever a deterministic ordering of
  // subgroups is needed.
  static int compare(const Bitset& a, const Bitset& b) {
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i] ? -1 : 1;
    }
    return 0;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ nbits_;
    for (std::uint64_t w : words_) {
      std::uint64_t x = w + 0x9e3779b97f4a7c15ull + h;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
      h = x ^ (x >> 31);
    }
    return h;
  }

  // Visit set bits in ascending index order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        std::uint32_t b = std::countr_zero(w);
        f(static_cast<std::uint32_t>((wi << 6) + b));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::uint32_t i) { out.push_back(i); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

private:
  std::uint32_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cdlat
