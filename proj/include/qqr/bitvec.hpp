#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace qqr {

/// Packed, fixed-length bit vector over GF(2). Bits past size() are kept zero.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t nbits)
      : nbits_(nbits), words_((nbits + kWordBits - 1) / kWordBits, 0) {}

  /// Parses a string of '0'/'1' characters; bit i is character i.
  static BitVec from_string(const std::string& bits);
  /// Low `nbits` bits of `mask`; nbits <= 64.
  static BitVec from_mask(std::uint64_t mask, std::size_t nbits);
  static BitVec ones(std::size_t nbits);

  std::size_t size() const noexcept { return nbits_; }
  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i, bool value = true) noexcept {
    const Word bit = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= bit;
    } else {
      words_[i / kWordBits] &= ~bit;
    }
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }

  /// Index of the lowest set bit, or size() if none.
  std::size_t first_set() const noexcept;

  /// Low word; only meaningful when size() <= 64.
  std::uint64_t to_mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  BitVec& operator^=(const BitVec& rhs) noexcept;
  BitVec& operator&=(const BitVec& rhs) noexcept;
  BitVec& operator|=(const BitVec& rhs) noexcept;
  friend BitVec operator^(BitVec a, const BitVec& b) noexcept { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) noexcept { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) noexcept { return a |= b; }
  friend bool operator==(const BitVec&, const BitVec&) = default;

  /// Lexicographic on the word array (low word first); a strict weak order for containers.
  friend bool operator<(const BitVec& a, const BitVec& b) noexcept;

  BitVec complement() const;

  /// Cyclic rotation: bit i moves to (i + shift) mod size().
  BitVec rotated(std::size_t shift) const;

  /// Parity of popcount(*this & other).
  bool dot(const BitVec& other) const noexcept;

  /// This vector followed by `tail`.
  BitVec concat(const BitVec& tail) const;
  BitVec slice(std::size_t begin, std::size_t length) const;

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> set_bits() const;

  /// '0'/'1' characters, bit 0 first.
  std::string to_string() const;
  /// The parenthesized tuple form "(1, 0, 1)".
  std::string to_tuple() const;

  std::size_t hash() const noexcept;

 private:
  void clear_tail() noexcept;

  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const noexcept { return v.hash(); }
};

}  // namespace qqr
