#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ramsat {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

namespace bits {

inline bool test(std::span<const Word> w, std::size_t i) {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1U;
}
inline void set(std::span<Word> w, std::size_t i) { w[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void reset(std::span<Word> w, std::size_t i) {
  w[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

inline std::size_t count(std::span<const Word> w) {
  std::size_t c = 0;
  for (Word x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

inline bool none(std::span<const Word> w) {
  for (Word x : w)
    if (x) return false;
  return true;
}

/// Index of the lowest set bit at or after `from`, or `npos` (= w.size()*64).
inline std::size_t next(std::span<const Word> w, std::size_t from) {
  std::size_t wi = from / kWordBits;
  if (wi >= w.size()) return w.size() * kWordBits;
  Word cur = w[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (cur) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
    if (++wi == w.size()) return w.size() * kWordBits;
    cur = w[wi];
  }
}

template <class F>
void for_each(std::span<const Word> w, F&& f) {
  for (std::size_t wi = 0; wi < w.size(); ++wi) {
    Word cur = w[wi];
    while (cur) {
      f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(cur)));
      cur &= cur - 1;
    }
  }
}

}  // namespace bits

/// Owning fixed-size bitset used for vertex subsets.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), words_(words_for(n), 0) {}

  static VertexSet full(std::size_t n) {
    VertexSet s(n);
    for (std::size_t i = 0; i < n; ++i) s.insert(i);
    return s;
  }

  std::size_t universe() const { return n_; }
  bool contains(std::size_t v) const { return v < n_ && bits::test(words_, v); }
  void insert(std::size_t v) { bits::set(words_, v); }
  void erase(std::size_t v) { bits::reset(words_, v); }
  std::size_t size() const { return bits::count(words_); }
  bool empty() const { return bits::none(words_); }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    bits::for_each(words_, [&](std::size_t v) { out.push_back(static_cast<int>(v)); });
    return out;
  }

  VertexSet& operator&=(std::span<const Word> other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other[i];
    return *this;
  }
  VertexSet& subtract(std::span<const Word> other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other[i];
    return *this;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Word> words_;
};

}  // namespace ramsat
