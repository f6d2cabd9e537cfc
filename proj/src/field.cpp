#include "qqr/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qqr {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  if (((a | b) >> 32) == 0) return a * b % m;
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These witnesses are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t p) : p_(p) {
  if (p < 3 || (p & 1U) == 0 || !is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
  }
}

std::uint64_t inv_mod(std::uint64_t a, const Prime& p) {
  a %= p.value();
  if (a == 0) throw std::invalid_argument("inv_mod: zero has no inverse");
  return pow_mod(a, p.value() - 2, p.value());
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t primitive_root(const Prime& p) {
  const std::uint64_t order = p.value() - 1;
  const auto factors = prime_factors(order);
  for (std::uint64_t g = 2; g < p.value(); ++g) {
    const bool generates = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t q) {
      return pow_mod(g, order / q, p.value()) != 1;
    });
    if (generates) return g;
  }
  return 1;  // p = 3 lands here only if 2 fails, which it never does
}

// ---------------------------------------------------------------------------
// Subset

Subset::Subset(Prime p, BitVec bits) : p_(p), bits_(std::move(bits)) {
  if (bits_.size() != p_.value()) throw std::invalid_argument("Subset: bit length must equal p");
}

Subset Subset::from_elements(Prime p, const std::vector<std::uint64_t>& elements) {
  Subset s(p);
  for (std::uint64_t e : elements) s.insert(e);
  return s;
}

Subset Subset::parse(Prime p, const std::string& text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch == '{' || ch == '}' || ch == '[' || ch == ']') continue;
    cleaned += (ch == ',') ? ' ' : ch;
  }
  std::istringstream in(cleaned);
  Subset s(p);
  std::string tok;
  while (in >> tok) {
    if (!std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c) || c == '-'; })) {
      throw std::invalid_argument("subset element '" + tok + "' is not an integer");
    }
    const long long v = std::stoll(tok);
    const auto pp = static_cast<long long>(p.value());
    s.insert(static_cast<std::uint64_t>(((v % pp) + pp) % pp));
  }
  return s;
}

Subset Subset::symmetric_difference(const Subset& other) const {
  if (!(p_ == other.p_)) throw std::invalid_argument("symmetric_difference: mismatched p");
  return Subset(p_, bits_ ^ other.bits_);
}

Subset Subset::affine_image(std::uint64_t u, std::uint64_t v) const {
  Subset out(p_);
  bits_.for_each_set([&](std::size_t s) { out.insert((mul_mod(u, s, p_.value()) + v) % p_.value()); });
  return out;
}

std::vector<std::uint64_t> Subset::elements() const {
  std::vector<std::uint64_t> out;
  bits_.for_each_set([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::string Subset::to_string() const {
  std::string s = "{";
  bool first = true;
  bits_.for_each_set([&](std::size_t i) {
    if (!first) s += ", ";
    s += std::to_string(i);
    first = false;
  });
  return s + "}";
}

// ---------------------------------------------------------------------------
// Characters and point counts

int legendre(std::uint64_t a, const Prime& p) {
  a %= p.value();
  if (a == 0) return 0;
  const std::uint64_t e = pow_mod(a, (p.value() - 1) / 2, p.value());
  if (e == 1) return 1;
  if (e == p.value() - 1) return -1;
  throw CrossCheckError("Euler criterion produced neither 1 nor -1");
}

std::vector<int> legendre_table(const Prime& p) {
  const std::uint64_t n = p.value();
  std::vector<int> table(n, -1);
  table[0] = 0;
  for (std::uint64_t y = 1; y <= n / 2; ++y) table[mul_mod(y, y, n)] = 1;
  return table;
}

ResidueSets residue_sets(const Prime& p) {
  ResidueSets sets{Subset(p), Subset(p)};
  const auto table = legendre_table(p);
  for (std::uint64_t a = 1; a < p.value(); ++a) {
    (table[a] == 1 ? sets.squares : sets.nonsquares).insert(a);
  }
  return sets;
}

namespace {

void require_nonempty(const Subset& s, const char* op) {
  if (s.empty()) {
    throw std::invalid_argument(std::string(op) + ": S must be non-empty (f_S of the empty set is not a curve)");
  }
}

// Lemire's remainder by multiplication, exact for 32-bit numerators.
struct FastMod {
  explicit FastMod(std::uint64_t d) : d(d), m(~std::uint64_t{0} / d + 1) {}
  std::uint64_t operator()(std::uint64_t a) const {
    const std::uint64_t low = m * a;
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(low) * d) >> 64);
  }
  std::uint64_t d;
  std::uint64_t m;
};

std::uint64_t eval_f(const std::vector<std::uint64_t>& roots, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 1;
  if (p < (1U << 16)) {
    const FastMod mod(p);
    for (std::uint64_t r : roots) {
      acc = mod(acc * (x >= r ? x - r : x + p - r));
      if (acc == 0) break;
    }
    return acc;
  }
  for (std::uint64_t r : roots) {
    acc = mul_mod(acc, x >= r ? x - r : x + p - r, p);
    if (acc == 0) break;
  }
  return acc;
}

}  // namespace

std::int64_t char_sum(const Subset& s) {
  require_nonempty(s, "char_sum");
  const std::uint64_t p = s.prime().value();
  const auto table = legendre_table(s.prime());
  const auto roots = s.elements();
  std::int64_t sum = 0;
  for (std::uint64_t a = 0; a < p; ++a) sum += table[eval_f(roots, a, p)];
  return sum;
}

std::int64_t affine_count_scaled(const Subset& s, std::uint64_t leading) {
  const std::uint64_t p = s.prime().value();
  // root_count[v] = #{y : y^2 = v}
  std::vector<std::int64_t> root_count(p, 0);
  for (std::uint64_t y = 0; y < p; ++y) ++root_count[mul_mod(y, y, p)];
  const auto roots = s.elements();
  std::int64_t affine = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t v = eval_f(roots, x, p);
    affine += root_count[leading == 1 ? v : mul_mod(leading % p, v, p)];
  }
  return affine;
}

CurveCount point_count(const Subset& s) {
  require_nonempty(s, "point_count");
  const std::uint64_t p = s.prime().value();
  const std::size_t n = s.size();
  const bool even = (n % 2) == 0;

  CurveCount c;
  c.affine = affine_count_scaled(s, 1);
  c.at_infinity = even ? 2 : 1;
  c.total = c.affine + c.at_infinity;
  c.char_sum = char_sum(s);
  c.genus = even ? (n - 2) / 2 : (n - 1) / 2;

  const std::int64_t via_identity = static_cast<std::int64_t>(p) + c.char_sum + c.at_infinity;
  if (via_identity != c.total) {
    throw CrossCheckError("point_count: pair enumeration " + std::to_string(c.total) +
                          " disagrees with character-sum identity " + std::to_string(via_identity) + " for S=" +
                          s.to_string());
  }
  return c;
}

MoebiusReduction moebius_reduce(const Subset& s, std::uint64_t a) {
  const std::uint64_t p = s.prime().value();
  if (s.size() % 2 != 0) throw std::invalid_argument("moebius_reduce: |S| must be even");
  if (a >= p || !s.contains(a)) throw std::invalid_argument("moebius_reduce: a must be an element of S");

  std::uint64_t c = 1;
  for (std::uint64_t t : s.elements()) {
    if (t != a) c = mul_mod(c, (a + p - t) % p, p);
  }

  // |S| - 1 is odd, so scaling x' by a nonresidue u flips chi(c u^{|S|-1}).
  std::uint64_t u = 1;
  if (legendre(c, s.prime()) != 1) {
    u = 2;
    while (legendre(u, s.prime()) != -1) ++u;
  }

  Subset reduced(s.prime());
  for (std::uint64_t t : s.elements()) {
    if (t == a) continue;
    reduced.insert(inv_mod(mul_mod((t + p - a) % p, u, p), s.prime()));
  }

  const std::uint64_t lead = mul_mod(c, pow_mod(u, s.size() - 1, p), p);
  MoebiusReduction out{reduced, c, u, u != 1, 0, 0, 0};
  out.original_total = point_count(s).total;
  out.transformed_total = affine_count_scaled(reduced, lead) + 1;
  out.reduced_total = point_count(reduced).total;
  if (out.original_total != out.transformed_total || out.transformed_total != out.reduced_total) {
    throw CrossCheckError("moebius_reduce: point counts differ for S=" + s.to_string());
  }
  return out;
}

VolochCount voloch_q_count(const Prime& p) {
  const std::uint64_t r = p.value() % 8;
  if (r != 1 && r != 3) {
    throw std::invalid_argument("voloch_q_count requires p = 1 or 3 (mod 8); got p = " + std::to_string(p.value()) +
                                " = " + std::to_string(r) + " (mod 8)");
  }
  const auto sets = residue_sets(p);
  VolochCount out{point_count(sets.squares).total, 0};
  out.a = Rational(out.total) - Rational(3 * static_cast<std::int64_t>(p.value()), 2);
  if (out.a < Rational(-1, 2) || out.a > Rational(5, 2)) {
    throw CrossCheckError("voloch_q_count: a = " + to_fraction_string(out.a) + " outside [-1/2, 5/2]");
  }
  return out;
}

namespace {

struct EllPowerData {
  Subset powers;
  std::vector<std::uint64_t> roots;
  bool condition;
};

EllPowerData ell_power_data(const Prime& p, std::uint64_t ell) {
  const std::uint64_t n = p.value();
  if (ell < 2) throw std::invalid_argument("ell_power_construction: l must be >= 2");
  if ((n - 1) % ell != 0) {
    throw std::invalid_argument("ell_power_construction: l = " + std::to_string(ell) + " does not divide p - 1 = " +
                                std::to_string(n - 1));
  }
  const std::uint64_t g = primitive_root(p);
  const std::uint64_t zeta = pow_mod(g, (n - 1) / ell, n);

  EllPowerData d{Subset(p), {}, true};
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < ell; ++i) {
    d.roots.push_back(r);
    if (i >= 1 && legendre((r + n - 1) % n, p) != 1) d.condition = false;
    r = mul_mod(r, zeta, n);
  }
  const std::uint64_t gl = pow_mod(g, ell, n);
  std::uint64_t x = 1;
  for (std::uint64_t j = 0; j < (n - 1) / ell; ++j) {
    d.powers.insert(x);
    x = mul_mod(x, gl, n);
  }
  return d;
}

}  // namespace

EllPowerResult ell_power_construction(const Prime& p, std::uint64_t ell) {
  auto d = ell_power_data(p, ell);
  EllPowerResult out{d.powers, d.roots, d.condition, point_count(d.powers).total, 0};
  const auto pl = static_cast<std::int64_t>(p.value());
  out.a = Rational(out.total) - Rational(2 * pl) + Rational(pl, static_cast<std::int64_t>(ell));
  if (out.condition_holds && (out.a < Rational(-1, 2) || out.a > Rational(5, 2))) {
    throw CrossCheckError("ell_power_construction: a = " + to_fraction_string(out.a) + " outside [-1/2, 5/2]");
  }
  return out;
}

std::vector<std::uint64_t> ell_power_primes(std::uint64_t ell, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 3; n < limit; n += 2) {
    if (!is_prime(n) || (n - 1) % ell != 0) continue;
    if (ell_power_data(Prime(n), ell).condition) out.push_back(n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// FastPointCounter

FastPointCounter::FastPointCounter(Prime p) : p_(p) {
  const std::uint64_t n = p.value();
  const auto table = legendre_table(p);
  masks_.reserve(n);
  for (std::uint64_t a = 0; a < n; ++a) {
    BitVec m(n);
    for (std::uint64_t s = 0; s < n; ++s) {
      if (table[(a + n - s) % n] == -1) m.set(s);
    }
    if (n <= 64) word_masks_.push_back(m.to_mask());
    masks_.push_back(std::move(m));
  }
}

std::int64_t FastPointCounter::char_sum(const BitVec& s) const {
  std::int64_t sum = 0;
  for (std::uint64_t a = 0; a < p_.value(); ++a) {
    if (s.test(a)) continue;
    sum += (masks_[a].dot(s)) ? -1 : 1;
  }
  return sum;
}

std::int64_t FastPointCounter::total(const BitVec& s) const {
  const std::int64_t inf = (s.count() % 2 == 0) ? 2 : 1;
  return static_cast<std::int64_t>(p_.value()) + char_sum(s) + inf;
}

std::int64_t FastPointCounter::char_sum_mask(std::uint64_t s) const noexcept {
  std::int64_t sum = 0;
  std::uint64_t outside = ~s;
  if (p_.value() < 64) outside &= (std::uint64_t{1} << p_.value()) - 1;
  while (outside != 0) {
    const int a = std::countr_zero(outside);
    outside &= outside - 1;
    sum += (std::popcount(word_masks_[static_cast<std::size_t>(a)] & s) & 1) ? -1 : 1;
  }
  return sum;
}

std::int64_t FastPointCounter::total_mask(std::uint64_t s) const noexcept {
  const std::int64_t inf = (std::popcount(s) % 2 == 0) ? 2 : 1;
  return static_cast<std::int64_t>(p_.value()) + char_sum_mask(s) + inf;
}

}  // namespace qqr
