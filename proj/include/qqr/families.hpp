#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qqr/bitvec.hpp"
#include "qqr/bounds.hpp"
#include "qqr/field.hpp"
#include "qqr/gf2linalg.hpp"
#include "qqr/ring.hpp"

namespace qqr {

/// (r_N r_S, r_Q r_S) for one subset S.
struct QqrCodeword {
  Subset subset;
  RingElement left;   // r_N r_S
  RingElement right;  // r_Q r_S

  BitVec vector() const { return left.coefficients().concat(right.coefficients()); }
  std::size_t weight() const { return left.weight() + right.weight(); }
};

/// Codeword via two ring multiplications.
QqrCodeword qqr_codeword(const Subset& s);

/// Caches the p rotations of r_N and r_Q so that a codeword costs |S| XORs.
class QqrContext {
 public:
  explicit QqrContext(Prime p);

  const Prime& prime() const noexcept { return p_; }
  const ResidueSets& residues() const noexcept { return sets_; }

  /// Length-2p codeword of S.
  BitVec vector(const BitVec& s) const;
  BitVec vector(const Subset& s) const { return vector(s.bits()); }

 private:
  Prime p_;
  ResidueSets sets_;
  std::vector<BitVec> rot_n_;
  std::vector<BitVec> rot_q_;
};

/// k = p for p = 3 (mod 4), p - 1 for p = 1 (mod 4).
std::size_t expected_qqr_dimension(const Prime& p);

/// Span of the singleton codewords. Requires p >= 5.
LinearCode build_qqr(const Prime& p);

/// Weight from the character-sum side, split by |S| parity and p mod 4.
/// Empty S gives 0; S = GF(p) uses the empty-product value sum chi(1) = p.
std::int64_t qqr_weight_via_curve(const Subset& s);

/// Weight from the point-count side; nullopt when the curve involved would be X_empty.
std::optional<std::int64_t> qqr_weight_via_point_count(const Subset& s);

struct WeightAgreement {
  std::int64_t ring;
  std::int64_t char_sum_formula;
  std::optional<std::int64_t> point_count_formula;
  bool agree() const {
    return ring == char_sum_formula && (!point_count_formula || *point_count_formula == ring);
  }
};

WeightAgreement weight_agreement(const QqrContext& ctx, const Subset& s);

/// span(C_NQ, all-ones). Requires p = 1 (mod 4), p >= 5.
LinearCode build_extended_qqr(const Prime& p);

struct ExtendedQqrReport {
  std::size_t dimension;
  bool dimension_is_p;
  WeightDistribution qqr_distribution;
  WeightDistribution distribution;
  bool equals_a_plus_reversed;
  bool formally_self_dual;
};

ExtendedQqrReport extended_qqr_report(const Prime& p, const EnumerationOptions& opts = {});

/// The length-4p LQR code {c_S} with c_S = (r_N r_S, r_Q r_S, r_N r_S*, r_Q r_S*).
class LqrCode {
 public:
  explicit LqrCode(Prime p);

  const Prime& prime() const noexcept { return ctx_.prime(); }
  std::size_t length() const noexcept { return 4 * ctx_.prime().value(); }
  bool is_linear() const noexcept { return ctx_.prime().value() % 4 == 1; }

  BitVec codeword(const Subset& s) const;
  /// v_S = (r_N r_S, r_Q r_S, r_N r_S, r_Q r_S).
  BitVec v(const Subset& s) const;

  /// Number of distinct c_S, by enumerating all 2^p subsets (p <= 24).
  std::uint64_t enumerate_size() const;

  /// Case-split weight: 2 * qqr_weight_via_curve(S) for p = 1 (mod 4), 2p otherwise.
  std::int64_t weight_formula(const Subset& s) const;

  /// 2p - 2 sum chi(f_S(a)) read literally without the parity split; p = 1 (mod 4), S non-empty.
  std::int64_t literal_weight_formula(const Subset& s) const;

  /// span{c_S}; for p = 1 (mod 4) this is C itself.
  LinearCode span() const;

  const QqrContext& context() const noexcept { return ctx_; }

 private:
  QqrContext ctx_;
};

/// Requires p >= 5.
LqrCode build_lqr(const Prime& p);

/// C-bar = C u V for p = 3 (mod 4).
LinearCode build_lqr_bar(const Prime& p);

struct LqrBarReport {
  std::size_t dimension;
  std::size_t min_distance;
  std::int64_t max_point_count;
  std::int64_t d_p;           // 4p - 2 max_S |X_S|
  std::int64_t predicted;     // min(d_p, 2p)
  bool equals_predicted;
  bool at_least_predicted;
  bool union_is_span;         // C u V enumerates exactly the span
};

LqrBarReport lqr_bar_report(const Prime& p, const EnumerationOptions& opts = {}, const SearchOptions& search = {});

struct LinearityReport {
  std::uint64_t size;
  bool addition_law_holds;   // c_{S1} + c_{S2} = v_{S1 delta S2} on the sampled pairs
  bool v_equals_c;           // expected exactly when p = 1 (mod 4)
  std::optional<bool> doubled_distribution_matches;  // p = 1 (mod 4): A^C_{2w} = A^{NQ}_w
};

LinearityReport lqr_structure_report(const Prime& p, std::uint64_t pairs, std::uint64_t seed,
                                     const EnumerationOptions& opts = {});

struct ConjectureReport {
  Prime p;
  std::size_t dimension;
  std::size_t expected_dimension;
  // p = 1 (mod 4)
  std::optional<bool> intersection_trivial{};
  std::optional<bool> sum_full{};
  // p = 3 (mod 4)
  std::optional<bool> self_dual{};
  std::optional<std::size_t> min_distance{};          // when k <= cap
  std::optional<std::int64_t> upper_bound{};          // 4 floor(p/12) + 6, p = 3 (mod 4)
  std::optional<bool> upper_bound_holds{};
  std::optional<bool> sqrt_bound_holds{};             // d >= sqrt(p), p = +-1 (mod 8)
  std::optional<std::int64_t> max_point_count{};      // exhaustive, p <= cap
  std::optional<bool> five_thirds_holds{};            // max > 5p/3 - 4, p = 3 (mod 4)
};

/// Reports conjectured and conditional properties; never throws on a failed conjecture.
ConjectureReport conjecture_checks(const Prime& p, const EnumerationOptions& opts = {},
                                   const SearchOptions& search = {});

}  // namespace qqr
