#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace grouptrix {

/// Fixed-size dynamic bitset over 64-bit words. Bits past size() are kept zero.
class Bitset {
 public:
  using Word = std::uint64_t;

  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

  std::size_t size() const { return n_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= Word{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(Word{1} << (i & 63)); }
  void set_all() {
    std::fill(words_.begin(), words_.end(), ~Word{0});
    trim();
  }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }
  bool any() const { return !none(); }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const { return next(0); }
  /// Index of the lowest set bit >= from, or size() when none.
  std::size_t next(std::size_t from) const {
    if (from >= n_) return n_;
    std::size_t wi = from >> 6;
    Word w = words_[wi] & (~Word{0} << (from & 63));
    while (true) {
      if (w != 0) return std::min(n_, (wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
      if (++wi >= words_.size()) return n_;
      w = words_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// this &= ~o
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  Bitset operator~() const {
    Bitset r(*this);
    for (Word& w : r.words_) w = ~w;
    r.trim();
    return r;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  std::size_t intersection_count(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) = default;

  std::size_t hash() const {
    std::size_t h = n_ * 0x9E3779B97F4A7C15ull;
    for (Word w : words_) h = (h ^ std::hash<Word>{}(w)) * 0x100000001B3ull + (h >> 29);
    return h;
  }

 private:
  void trim() {
    if (n_ & 63) words_.back() &= (Word{1} << (n_ & 63)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<Word> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace grouptrix
