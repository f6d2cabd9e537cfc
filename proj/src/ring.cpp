#include "qqr/ring.hpp"

#include <stdexcept>

namespace qqr {

RingElement::RingElement(Prime p, BitVec coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != p_.value()) throw std::invalid_argument("RingElement: bit length must equal p");
}

RingElement RingElement::one(Prime p) {
  RingElement r(p);
  r.coeffs_.set(0);
  return r;
}

RingElement& RingElement::operator+=(const RingElement& rhs) {
  if (!(p_ == rhs.p_)) throw std::invalid_argument("ring addition: mismatched p");
  coeffs_ ^= rhs.coeffs_;
  return *this;
}

RingElement multiply(const RingElement& a, const RingElement& b) {
  if (!(a.prime() == b.prime())) throw std::invalid_argument("ring multiply: mismatched p");
  BitVec acc(a.prime().value());
  a.coefficients().for_each_set([&](std::size_t i) { acc ^= b.coefficients().rotated(i); });
  return RingElement(a.prime(), std::move(acc));
}

RingElement star(const RingElement& r) { return RingElement(r.prime(), r.coefficients().complement()); }

RingElement square(const RingElement& r) {
  const std::uint64_t p = r.prime().value();
  BitVec out(p);
  r.coefficients().for_each_set([&](std::size_t i) { out.set((2 * i) % p); });
  return RingElement(r.prime(), std::move(out));
}

HCount h_count(const Subset& s1, const Subset& s2, std::uint64_t a) {
  if (!(s1.prime() == s2.prime())) throw std::invalid_argument("h_count: mismatched p");
  const std::uint64_t p = s1.prime().value();
  a %= p;
  std::uint64_t count = 0;
  s1.bits().for_each_set([&](std::size_t x) {
    if (s2.contains((a + p - x) % p)) ++count;
  });
  return {count, (count & 1U) != 0};
}

}  // namespace qqr
