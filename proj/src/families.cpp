#include "qqr/families.hpp"

#include <random>
#include <stdexcept>
#include <unordered_set>

namespace qqr {

namespace {

void require_family_prime(const Prime& p, const char* op) {
  if (p.value() < 5) throw std::invalid_argument(std::string(op) + ": p must be at least 5");
}

bool one_mod_four(const Prime& p) { return p.value() % 4 == 1; }

}  // namespace

QqrCodeword qqr_codeword(const Subset& s) {
  const auto sets = residue_sets(s.prime());
  const auto rs = RingElement::from_subset(s);
  return {s, RingElement::from_subset(sets.nonsquares) * rs, RingElement::from_subset(sets.squares) * rs};
}

QqrContext::QqrContext(Prime p) : p_(p), sets_(residue_sets(p)) {
  rot_n_.reserve(p.value());
  rot_q_.reserve(p.value());
  for (std::size_t i = 0; i < p.value(); ++i) {
    rot_n_.push_back(sets_.nonsquares.bits().rotated(i));
    rot_q_.push_back(sets_.squares.bits().rotated(i));
  }
}

BitVec QqrContext::vector(const BitVec& s) const {
  BitVec left(p_.value());
  BitVec right(p_.value());
  s.for_each_set([&](std::size_t i) {
    left ^= rot_n_[i];
    right ^= rot_q_[i];
  });
  return left.concat(right);
}

std::size_t expected_qqr_dimension(const Prime& p) { return one_mod_four(p) ? p.value() - 1 : p.value(); }

LinearCode build_qqr(const Prime& p) {
  require_family_prime(p, "build_qqr");
  const QqrContext ctx(p);
  BinaryMatrix gens(2 * p.value());
  for (std::uint64_t i = 0; i < p.value(); ++i) gens.add_row(ctx.vector(Subset::from_elements(p, {i})));
  return LinearCode(gens);
}

std::int64_t qqr_weight_via_curve(const Subset& s) {
  const auto p = static_cast<std::int64_t>(s.prime().value());
  if (s.empty()) return 0;
  if (s.size() % 2 == 0) return p - char_sum(s);
  const Subset comp = s.complement();
  const std::int64_t comp_sum = comp.empty() ? p : char_sum(comp);
  return one_mod_four(s.prime()) ? p - comp_sum : p + comp_sum;
}

std::optional<std::int64_t> qqr_weight_via_point_count(const Subset& s) {
  const auto p = static_cast<std::int64_t>(s.prime().value());
  if (s.empty()) return 0;
  if (s.size() % 2 == 0) return 2 * p + 2 - point_count(s).total;
  const Subset comp = s.complement();
  if (comp.empty()) return std::nullopt;
  const std::int64_t total = point_count(comp).total;
  return one_mod_four(s.prime()) ? 2 * p + 2 - total : total - 2;
}

WeightAgreement weight_agreement(const QqrContext& ctx, const Subset& s) {
  return {static_cast<std::int64_t>(ctx.vector(s).count()), qqr_weight_via_curve(s), qqr_weight_via_point_count(s)};
}

LinearCode build_extended_qqr(const Prime& p) {
  require_family_prime(p, "build_extended_qqr");
  if (!one_mod_four(p)) throw std::invalid_argument("build_extended_qqr: requires p = 1 (mod 4)");
  const LinearCode base = build_qqr(p);
  BinaryMatrix gens = base.generator();
  gens.add_row(BitVec::ones(2 * p.value()));
  return LinearCode(gens);
}

ExtendedQqrReport extended_qqr_report(const Prime& p, const EnumerationOptions& opts) {
  const LinearCode ext = build_extended_qqr(p);
  ExtendedQqrReport r{ext.dimension(), ext.dimension() == p.value(), weight_distribution(build_qqr(p), opts),
                      weight_distribution(ext, opts), false, false};
  r.equals_a_plus_reversed = r.distribution == r.qqr_distribution + r.qqr_distribution.reversed();
  r.formally_self_dual = macwilliams(r.distribution, ext.length(), ext.dimension()) == r.distribution;
  return r;
}

// ---------------------------------------------------------------------------
// LQR

LqrCode::LqrCode(Prime p) : ctx_(p) {}

BitVec LqrCode::codeword(const Subset& s) const {
  return ctx_.vector(s).concat(ctx_.vector(s.bits().complement()));
}

BitVec LqrCode::v(const Subset& s) const {
  const BitVec half = ctx_.vector(s);
  return half.concat(half);
}

std::uint64_t LqrCode::enumerate_size() const {
  const std::uint64_t n = prime().value();
  if (n > 24) throw std::invalid_argument("LqrCode::enumerate_size: p too large to enumerate");
  std::unordered_set<BitVec, BitVecHash> seen;
  seen.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) seen.insert(codeword(Subset::from_mask(prime(), m)));
  return seen.size();
}

std::int64_t LqrCode::weight_formula(const Subset& s) const {
  if (!is_linear()) return 2 * static_cast<std::int64_t>(prime().value());
  return 2 * qqr_weight_via_curve(s);
}

std::int64_t LqrCode::literal_weight_formula(const Subset& s) const {
  if (!is_linear()) throw std::invalid_argument("literal_weight_formula: requires p = 1 (mod 4)");
  return 2 * static_cast<std::int64_t>(prime().value()) - 2 * char_sum(s);
}

LinearCode LqrCode::span() const {
  BinaryMatrix gens(length());
  gens.add_row(codeword(Subset(prime())));
  for (std::uint64_t i = 0; i < prime().value(); ++i) gens.add_row(codeword(Subset::from_elements(prime(), {i})));
  return LinearCode(gens);
}

LqrCode build_lqr(const Prime& p) {
  require_family_prime(p, "build_lqr");
  return LqrCode(p);
}

LinearCode build_lqr_bar(const Prime& p) {
  require_family_prime(p, "build_lqr_bar");
  if (one_mod_four(p)) throw std::invalid_argument("build_lqr_bar: requires p = 3 (mod 4)");
  return LqrCode(p).span();
}

LqrBarReport lqr_bar_report(const Prime& p, const EnumerationOptions& opts, const SearchOptions& search) {
  const LqrCode lqr = build_lqr(p);
  const LinearCode bar = build_lqr_bar(p);
  LqrBarReport r{};
  r.dimension = bar.dimension();
  r.min_distance = min_distance(bar, opts);

  SearchOptions exhaustive = search;
  exhaustive.strategy = Strategy::exhaustive;
  r.max_point_count = max_point_count_search(p, exhaustive).best_total;
  const auto pp = static_cast<std::int64_t>(p.value());
  r.d_p = 4 * pp - 2 * r.max_point_count;
  r.predicted = std::min(r.d_p, 2 * pp);
  r.equals_predicted = static_cast<std::int64_t>(r.min_distance) == r.predicted;
  r.at_least_predicted = static_cast<std::int64_t>(r.min_distance) >= r.predicted;

  std::unordered_set<BitVec, BitVecHash> members;
  bool contained = true;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.value()); ++m) {
    const Subset s = Subset::from_mask(p, m);
    for (BitVec w : {lqr.codeword(s), lqr.v(s)}) {
      contained = contained && bar.contains(w);
      members.insert(std::move(w));
    }
  }
  r.union_is_span = contained && members.size() == (std::size_t{1} << bar.dimension());
  return r;
}

LinearityReport lqr_structure_report(const Prime& p, std::uint64_t pairs, std::uint64_t seed,
                                     const EnumerationOptions& opts) {
  const LqrCode lqr = build_lqr(p);
  LinearityReport r{lqr.enumerate_size(), true, true, std::nullopt};

  std::mt19937_64 rng(seed);
  const std::uint64_t mask = (std::uint64_t{1} << p.value()) - 1;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    const Subset a = Subset::from_mask(p, rng() & mask);
    const Subset b = Subset::from_mask(p, rng() & mask);
    if ((lqr.codeword(a) ^ lqr.codeword(b)) != lqr.v(a.symmetric_difference(b))) r.addition_law_holds = false;
    if (lqr.codeword(a) != lqr.v(a)) r.v_equals_c = false;
  }
  if (lqr.is_linear()) {
    const auto lqr_dist = weight_distribution(lqr.span(), opts);
    const auto qqr_dist = weight_distribution(build_qqr(p), opts);
    bool match = lqr_dist.length() == 2 * qqr_dist.length();
    for (std::size_t w = 0; match && w <= lqr_dist.length(); ++w) {
      const BigInt expected = (w % 2 == 0) ? qqr_dist[w / 2] : BigInt(0);
      match = lqr_dist[w] == expected;
    }
    r.doubled_distribution_matches = match;
  }
  return r;
}

ConjectureReport conjecture_checks(const Prime& p, const EnumerationOptions& opts, const SearchOptions& search) {
  require_family_prime(p, "conjecture_checks");
  const LinearCode c = build_qqr(p);
  const LinearCode cd = dual(c);
  ConjectureReport r{p, c.dimension(), expected_qqr_dimension(p)};
  const auto pp = static_cast<std::int64_t>(p.value());
  const bool three_mod_four = !one_mod_four(p);

  if (three_mod_four) {
    r.self_dual = (c == cd);
  } else {
    const auto si = sum_and_intersection(c, cd);
    r.intersection_trivial = si.intersection.dimension() == 0;
    r.sum_full = si.sum.dimension() == c.length();
  }

  if (c.dimension() <= opts.cap) {
    const auto d = static_cast<std::int64_t>(min_distance(c, opts));
    r.min_distance = static_cast<std::size_t>(d);
    if (three_mod_four) {
      r.upper_bound = 4 * (pp / 12) + 6;
      r.upper_bound_holds = d <= *r.upper_bound;
    }
    if (pp % 8 == 1 || pp % 8 == 7) r.sqrt_bound_holds = d * d >= pp;
  }

  if (p.value() <= search.exhaustive_cap && three_mod_four) {
    SearchOptions exhaustive = search;
    exhaustive.strategy = Strategy::exhaustive;
    r.max_point_count = max_point_count_search(p, exhaustive).best_total;
    r.five_thirds_holds = 3 * *r.max_point_count > 5 * pp - 12;
  }
  return r;
}

}  // namespace qqr
