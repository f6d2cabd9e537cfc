#pragma once

// Brute-force reference implementations. Nothing here calls into the library
// beyond plain data types.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "qqr/bitvec.hpp"
#include "qqr/gf2linalg.hpp"

namespace oracle {

inline std::set<std::uint64_t> squares(std::uint64_t p) {
  std::set<std::uint64_t> q;
  for (std::uint64_t y = 1; y < p; ++y) q.insert(y * y % p);
  return q;
}

inline int chi(std::uint64_t a, std::uint64_t p, const std::set<std::uint64_t>& sq) {
  a %= p;
  if (a == 0) return 0;
  return sq.count(a) ? 1 : -1;
}

inline std::int64_t f_value(const std::vector<std::uint64_t>& s, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 1;
  for (auto t : s) acc = acc * ((x + p - t) % p) % p;
  return static_cast<std::int64_t>(acc);
}

/// #{(x, y) : y^2 = f_S(x)} plus points at infinity.
inline std::int64_t curve_points(const std::vector<std::uint64_t>& s, std::uint64_t p) {
  std::int64_t n = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const auto v = static_cast<std::uint64_t>(f_value(s, x, p));
    for (std::uint64_t y = 0; y < p; ++y) n += (y * y % p == v);
  }
  return n + (s.size() % 2 == 0 ? 2 : 1);
}

/// Cyclic product over F_2[x]/(x^p - 1) by the schoolbook double loop.
inline std::vector<int> ring_mul(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t p = a.size();
  std::vector<int> c(p, 0);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) c[(i + j) % p] ^= a[i] & b[j];
  return c;
}

/// Weight distribution by re-encoding every message from scratch.
inline std::vector<std::uint64_t> naive_distribution(const qqr::BinaryMatrix& g) {
  const std::size_t k = g.row_count();
  std::vector<std::uint64_t> a(g.cols() + 1, 0);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    qqr::BitVec w(g.cols());
    for (std::size_t i = 0; i < k; ++i)
      if ((m >> i) & 1U) w ^= g.row(i);
    ++a[w.count()];
  }
  return a;
}

/// All words orthogonal to every row, by exhausting F_2^n (n <= 20).
inline std::vector<std::uint64_t> brute_dual_distribution(const qqr::BinaryMatrix& g) {
  const std::size_t n = g.cols();
  std::vector<std::uint64_t> a(n + 1, 0);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const qqr::BitVec w = qqr::BitVec::from_mask(m, n);
    bool ok = true;
    for (const auto& r : g.rows()) ok = ok && !w.dot(r);
    if (ok) ++a[w.count()];
  }
  return a;
}

inline qqr::BinaryMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  qqr::BinaryMatrix m(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    qqr::BitVec r(cols);
    for (std::size_t j = 0; j < cols; ++j) r.set(j, rng() & 1U);
    m.add_row(r);
  }
  return m;
}

inline std::size_t gf2_rank(std::vector<std::vector<int>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && !m[piv][c]) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][c])
        for (std::size_t j = 0; j < cols; ++j) m[r][j] ^= m[rank][j];
    ++rank;
  }
  return rank;
}

inline std::vector<std::uint64_t> small_primes(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 3); n <= hi; ++n) {
    bool prime = n % 2 == 1;
    for (std::uint64_t d = 3; prime && d * d <= n; d += 2) prime = n % d != 0;
    if (prime) out.push_back(n);
  }
  return out;
}

}  // namespace oracle
