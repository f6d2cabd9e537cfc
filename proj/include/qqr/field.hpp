#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qqr/bitvec.hpp"
#include "qqr/numeric.hpp"

namespace qqr {

bool is_prime(std::uint64_t n);

/// An odd prime p >= 3.
class Prime {
 public:
  explicit Prime(std::uint64_t p);
  std::uint64_t value() const noexcept { return p_; }
  operator std::uint64_t() const noexcept { return p_; }  // NOLINT: used as an integer throughout
  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::uint64_t p_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, const Prime& p);

/// Prime factors of n, ascending, without multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Smallest generator of GF(p)^x, found by trial over 2..p-1.
std::uint64_t primitive_root(const Prime& p);

/// A subset of GF(p), stored as a length-p bit vector indexed by residue.
class Subset {
 public:
  explicit Subset(Prime p) : p_(p), bits_(p.value()) {}
  Subset(Prime p, BitVec bits);
  static Subset from_elements(Prime p, const std::vector<std::uint64_t>& elements);
  /// Parses "1,2,3" or "{1, 2, 3}"; elements are reduced mod p.
  static Subset parse(Prime p, const std::string& text);
  static Subset full(Prime p) { return Subset(p, BitVec::ones(p.value())); }
  /// Bits of `mask` as members; requires p <= 64.
  static Subset from_mask(Prime p, std::uint64_t mask) { return Subset(p, BitVec::from_mask(mask, p.value())); }

  const Prime& prime() const noexcept { return p_; }
  const BitVec& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool contains(std::uint64_t a) const noexcept { return bits_.test(a); }
  void insert(std::uint64_t a) { bits_.set(a % p_.value()); }
  void erase(std::uint64_t a) { bits_.set(a % p_.value(), false); }

  Subset complement() const { return Subset(p_, bits_.complement()); }
  Subset symmetric_difference(const Subset& other) const;
  /// {u*s + v : s in S}.
  Subset affine_image(std::uint64_t u, std::uint64_t v) const;

  std::vector<std::uint64_t> elements() const;
  /// "{1, 2, 3}".
  std::string to_string() const;

  friend bool operator==(const Subset& a, const Subset& b) { return a.p_ == b.p_ && a.bits_ == b.bits_; }

 private:
  Prime p_;
  BitVec bits_;
};

/// Quadratic residue character: 0 at 0, +1 on nonzero squares, -1 otherwise.
int legendre(std::uint64_t a, const Prime& p);

/// Legendre values for every residue, indexed 0..p-1.
std::vector<int> legendre_table(const Prime& p);

struct ResidueSets {
  Subset squares;      // Q
  Subset nonsquares;   // N
};
ResidueSets residue_sets(const Prime& p);

/// Sum over a in GF(p) of chi(prod_{s in S} (a - s)). Throws on empty S.
std::int64_t char_sum(const Subset& s);

struct CurveCount {
  std::int64_t affine = 0;
  int at_infinity = 0;
  std::int64_t total = 0;
  std::int64_t char_sum = 0;
  std::size_t genus = 0;
};

/// |X_S(GF(p))| for y^2 = f_S(x). The affine part is counted over (x, y)
/// pairs and cross-checked against the character-sum identity.
CurveCount point_count(const Subset& s);

/// Affine solutions of y^2 = c * prod_{s in S}(x - s), by pair enumeration.
std::int64_t affine_count_scaled(const Subset& s, std::uint64_t leading);

struct MoebiusReduction {
  Subset reduced;           // S'
  std::uint64_t leading;    // c = prod_{s != a}(a - s)
  std::uint64_t scale;      // u: 1 if chi(c) = 1, else the least nonresidue
  bool twist_corrected;     // true when u != 1 was needed to make the model monic
  std::int64_t original_total;
  std::int64_t transformed_total;  // y^2 = c u^{|S|-1} f_{S'}(x), odd-degree model
  std::int64_t reduced_total;      // point_count(S').total
};

/// x = a + 1/(u x'), y = y' / (u x')^{|S|/2}: maps an even-degree X_S to an
/// odd-degree model with the same number of points.
MoebiusReduction moebius_reduce(const Subset& s, std::uint64_t a);

struct VolochCount {
  std::int64_t total;
  Rational a;  // total - 3p/2
};

/// |X_Q| for p = 1, 3 (mod 8).
VolochCount voloch_q_count(const Prime& p);

struct EllPowerResult {
  Subset powers;             // P_l, nonzero l-th powers
  std::vector<std::uint64_t> roots_of_unity;  // r_1 = 1, r_2, ..., r_l
  bool condition_holds;      // chi(r_i - 1) = 1 for all i >= 2
  std::int64_t total;
  Rational a;                // total - (2 - 1/l) p
};

EllPowerResult ell_power_construction(const Prime& p, std::uint64_t ell);

/// Primes p < limit with l | p - 1 for which the splitting condition holds.
std::vector<std::uint64_t> ell_power_primes(std::uint64_t ell, std::uint64_t limit);

/// Point counting via parity masks: chi(f_S(a)) = 0 if a in S, otherwise
/// (-1)^{|S & M_a|} with M_a = {s : chi(a - s) = -1}. Shares nothing with
/// char_sum() beyond the Legendre table.
class FastPointCounter {
 public:
  explicit FastPointCounter(Prime p);

  const Prime& prime() const noexcept { return p_; }

  std::int64_t char_sum(const BitVec& s) const;
  std::int64_t total(const BitVec& s) const;

  /// Single-word variants; require p <= 64.
  std::int64_t char_sum_mask(std::uint64_t s) const noexcept;
  std::int64_t total_mask(std::uint64_t s) const noexcept;

 private:
  Prime p_;
  std::vector<BitVec> masks_;
  std::vector<std::uint64_t> word_masks_;
};

}  // namespace qqr
