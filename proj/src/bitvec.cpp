#include "qqr/bitvec.hpp"

#include <algorithm>
#include <stdexcept>

namespace qqr {

BitVec BitVec::from_string(const std::string& bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

BitVec BitVec::from_mask(std::uint64_t mask, std::size_t nbits) {
  if (nbits > kWordBits) throw std::invalid_argument("from_mask: nbits exceeds 64");
  BitVec v(nbits);
  if (nbits > 0) v.words_[0] = mask;
  v.clear_tail();
  return v;
}

BitVec BitVec::ones(std::size_t nbits) {
  BitVec v(nbits);
  std::fill(v.words_.begin(), v.words_.end(), ~Word{0});
  v.clear_tail();
  return v;
}

bool BitVec::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVec::first_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return nbits_;
}

BitVec& BitVec::operator^=(const BitVec& rhs) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& rhs) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= rhs.words_[i];
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& rhs) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= rhs.words_[i];
  return *this;
}

bool operator<(const BitVec& a, const BitVec& b) noexcept {
  if (a.nbits_ != b.nbits_) return a.nbits_ < b.nbits_;
  return a.words_ < b.words_;
}

BitVec BitVec::complement() const {
  BitVec out(*this);
  for (Word& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

BitVec BitVec::rotated(std::size_t shift) const {
  if (nbits_ == 0) return *this;
  shift %= nbits_;
  if (shift == 0) return *this;

  // out = (x << shift) | (x >> (n - shift)), both truncated to n bits.
  BitVec out(nbits_);
  const std::size_t nw = words_.size();

  const std::size_t wshift = shift / kWordBits;
  const std::size_t bshift = shift % kWordBits;
  for (std::size_t i = nw; i-- > wshift;) {
    Word w = words_[i - wshift] << bshift;
    if (bshift != 0 && i - wshift >= 1) w |= words_[i - wshift - 1] >> (kWordBits - bshift);
    out.words_[i] = w;
  }

  const std::size_t rs = nbits_ - shift;
  const std::size_t rw = rs / kWordBits;
  const std::size_t rb = rs % kWordBits;
  for (std::size_t i = 0; i + rw < nw; ++i) {
    Word w = words_[i + rw] >> rb;
    if (rb != 0 && i + rw + 1 < nw) w |= words_[i + rw + 1] << (kWordBits - rb);
    out.words_[i] |= w;
  }
  out.clear_tail();
  return out;
}

bool BitVec::dot(const BitVec& other) const noexcept {
  Word acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return (std::popcount(acc) & 1) != 0;
}

BitVec BitVec::concat(const BitVec& tail) const {
  BitVec out(nbits_ + tail.nbits_);
  std::copy(words_.begin(), words_.end(), out.words_.begin());
  const std::size_t off = nbits_ / kWordBits;
  const std::size_t sh = nbits_ % kWordBits;
  for (std::size_t i = 0; i < tail.words_.size(); ++i) {
    out.words_[off + i] |= tail.words_[i] << sh;
    if (sh != 0 && off + i + 1 < out.words_.size()) {
      out.words_[off + i + 1] |= tail.words_[i] >> (kWordBits - sh);
    }
  }
  out.clear_tail();
  return out;
}

BitVec BitVec::slice(std::size_t begin, std::size_t length) const {
  if (begin + length > nbits_) throw std::out_of_range("BitVec::slice out of range");
  BitVec out(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (test(begin + i)) out.set(i);
  }
  return out;
}

std::vector<std::size_t> BitVec::set_bits() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each_set([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::string BitVec::to_string() const {
  std::string s(nbits_, '0');
  for_each_set([&](std::size_t i) { s[i] = '1'; });
  return s;
}

std::string BitVec::to_tuple() const {
  std::string s = "(";
  for (std::size_t i = 0; i < nbits_; ++i) {
    if (i != 0) s += ", ";
    s += test(i) ? '1' : '0';
  }
  s += ')';
  return s;
}

std::size_t BitVec::hash() const noexcept {
  std::size_t h = std::hash<std::size_t>{}(nbits_);
  for (Word w : words_) {
    h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void BitVec::clear_tail() noexcept {
  const std::size_t rem = nbits_ % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

}  // namespace qqr
