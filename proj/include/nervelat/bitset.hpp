#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace nervelat {

/// Fixed-width set of bits over the universe {0, ..., width-1}.
///
/// One 64-bit word covers the common case (complexes on m <= 64 vertices);
/// wider universes (poset element sets, attribute sets) spill into more words.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int width) : width_(width), words_(word_count(width), 0) {
    assert(width >= 0);
  }

  static Bitset full(int width) {
    Bitset b(width);
    for (auto& w : b.words_) w = ~0ull;
    b.mask_tail();
    return b;
  }

  int width() const { return width_; }

  bool test(int i) const {
    assert(i >= 0 && i < width_);
    return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1ull;
  }
  Bitset& set(int i) {
    assert(i >= 0 && i < width_);
    words_[static_cast<size_t>(i) >> 6] |= 1ull << (i & 63);
    return *this;
  }
  Bitset& reset(int i) {
    assert(i >= 0 && i < width_);
    words_[static_cast<size_t>(i) >> 6] &= ~(1ull << (i & 63));
    return *this;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  bool is_subset_of(const Bitset& o) const {
    assert(width_ == o.width_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool is_proper_subset_of(const Bitset& o) const {
    return is_subset_of(o) && *this != o;
  }
  bool intersects(const Bitset& o) const {
    assert(width_ == o.width_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  Bitset operator&(const Bitset& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & b; }); }
  Bitset operator|(const Bitset& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a | b; }); }
  Bitset operator^(const Bitset& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a ^ b; }); }
  /// Set difference: bits in *this and not in o.
  Bitset minus(const Bitset& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }
  Bitset& operator&=(const Bitset& o) { return apply_in_place(o, [](uint64_t a, uint64_t b) { return a & b; }); }
  Bitset& operator|=(const Bitset& o) { return apply_in_place(o, [](uint64_t a, uint64_t b) { return a | b; }); }

  Bitset complement() const {
    Bitset r(width_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.mask_tail();
    return r;
  }

  /// Ascending list of set bit positions.
  std::vector<int> bits() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        out.push_back(static_cast<int>(wi * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

  int lowest_bit() const {
    for (size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi]) return static_cast<int>(wi * 64) + std::countr_zero(words_[wi]);
    return -1;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.width_ == b.width_ && a.words_ == b.words_;
  }
  friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

  /// Lexicographic order on the ascending vertex sequence: the set containing
  /// the lowest differing bit sorts first, so {0,2} < {1,2} and {0} < {0,1}.
  static int compare(const Bitset& a, const Bitset& b) {
    assert(a.width_ == b.width_);
    for (size_t i = 0; i < a.words_.size(); ++i) {
      uint64_t x = a.words_[i] ^ b.words_[i];
      if (x) {
        uint64_t low = x & (~x + 1);
        return (a.words_[i] & low) ? -1 : 1;
      }
    }
    return 0;
  }
  friend bool operator<(const Bitset& a, const Bitset& b) { return compare(a, b) < 0; }

  struct Hash {
    size_t operator()(const Bitset& b) const {
      uint64_t h = 1469598103934665603ull ^ static_cast<uint64_t>(b.width_);
      for (uint64_t w : b.words_) {
        h ^= w;
        h *= 1099511628211ull;
      }
      return static_cast<size_t>(h);
    }
  };

 private:
  static size_t word_count(int width) { return (static_cast<size_t>(width) + 63) / 64; }

  void mask_tail() {
    if (width_ % 64 != 0 && !words_.empty())
      words_.back() &= (1ull << (width_ % 64)) - 1;
  }

  template <class F>
  Bitset apply(const Bitset& o, F f) const {
    assert(width_ == o.width_);
    Bitset r(width_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = f(words_[i], o.words_[i]);
    return r;
  }
  template <class F>
  Bitset& apply_in_place(const Bitset& o, F f) {
    assert(width_ == o.width_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] = f(words_[i], o.words_[i]);
    return *this;
  }

  int width_ = 0;
  std::vector<uint64_t> words_;
};

/// Order by (cardinality, lexicographic); the order used for face lists.
inline bool card_lex_less(const Bitset& a, const Bitset& b) {
  int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return Bitset::compare(a, b) < 0;
}

}  // namespace nervelat
