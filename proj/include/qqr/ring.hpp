#pragma once

#include <cstdint>

#include "qqr/bitvec.hpp"
#include "qqr/field.hpp"

namespace qqr {

/// Element of F_2[x]/(x^p - 1); bit i is the coefficient of x^i.
class RingElement {
 public:
  explicit RingElement(Prime p) : p_(p), coeffs_(p.value()) {}
  RingElement(Prime p, BitVec coeffs);

  static RingElement from_subset(const Subset& s) { return RingElement(s.prime(), s.bits()); }
  static RingElement one(Prime p);

  const Prime& prime() const noexcept { return p_; }
  const BitVec& coefficients() const noexcept { return coeffs_; }
  std::size_t weight() const noexcept { return coeffs_.count(); }
  bool is_zero() const noexcept { return coeffs_.none(); }
  Subset support() const { return Subset(p_, coeffs_); }

  RingElement& operator+=(const RingElement& rhs);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Prime p_;
  BitVec coeffs_;
};

/// Cyclic convolution mod 2.
RingElement multiply(const RingElement& a, const RingElement& b);
inline RingElement operator*(const RingElement& a, const RingElement& b) { return multiply(a, b); }

/// (r_S)^* = r_{S^c}.
RingElement star(const RingElement& r);

/// r_S^2 = r_{2S}, computed by doubling exponents.
RingElement square(const RingElement& r);

struct HCount {
  std::uint64_t count;
  bool parity;
};

/// |{(s1, s2) in S1 x S2 : s1 + s2 = a}| and its parity.
HCount h_count(const Subset& s1, const Subset& s2, std::uint64_t a);

}  // namespace qqr
