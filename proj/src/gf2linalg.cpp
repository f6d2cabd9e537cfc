#include "qqr/gf2linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "qqr/parallel.hpp"

namespace qqr {

BinaryMatrix::BinaryMatrix(std::size_t cols, std::vector<BitVec> rows) : cols_(cols) {
  for (auto& r : rows) add_row(std::move(r));
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    BitVec r(n);
    r.set(i);
    m.add_row(std::move(r));
  }
  return m;
}

BinaryMatrix BinaryMatrix::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<BitVec> rows;
  std::size_t cols = 0;
  while (std::getline(in, line)) {
    std::erase_if(line, [](char c) { return c == ' ' || c == '\r' || c == '\t'; });
    if (line.empty()) continue;
    rows.push_back(BitVec::from_string(line));
    if (rows.size() == 1) cols = line.size();
  }
  return BinaryMatrix(cols, std::move(rows));
}

void BinaryMatrix::add_row(BitVec row) {
  if (row.size() != cols_) throw std::invalid_argument("BinaryMatrix: row length mismatch");
  rows_.push_back(std::move(row));
}

std::string BinaryMatrix::to_text() const {
  std::string out;
  for (const auto& r : rows_) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

RrefResult rref_rank(const BinaryMatrix& m) {
  std::vector<BitVec> rows = m.rows();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].test(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return {BinaryMatrix(m.cols(), std::move(rows)), rank, std::move(pivots)};
}

LinearCode::LinearCode(const BinaryMatrix& generators) : generator_(generators.cols()) {
  auto reduced = rref_rank(generators);
  generator_ = std::move(reduced.rref);
  pivots_ = std::move(reduced.pivots);
}

bool LinearCode::contains(const BitVec& word) const {
  if (word.size() != length()) return false;
  BitVec rest = word;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    if (rest.test(pivots_[i])) rest ^= generator_.row(i);
  }
  return rest.none();
}

BitVec LinearCode::encode(const BitVec& message) const {
  if (message.size() != dimension()) throw std::invalid_argument("encode: message length must equal k");
  BitVec out(length());
  message.for_each_set([&](std::size_t i) { out ^= generator_.row(i); });
  return out;
}

LinearCode dual(const LinearCode& c) {
  const std::size_t n = c.length();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t col : c.pivots()) is_pivot[col] = true;

  BinaryMatrix h(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVec row(n);
    row.set(f);
    for (std::size_t i = 0; i < c.dimension(); ++i) {
      if (c.generator().row(i).test(f)) row.set(c.pivots()[i]);
    }
    h.add_row(std::move(row));
  }
  return LinearCode(h);
}

SumIntersection sum_and_intersection(const LinearCode& a, const LinearCode& b) {
  const std::size_t n = a.length();
  if (b.length() != n) throw std::invalid_argument("sum_and_intersection: length mismatch");

  // Zassenhaus: rows (g | g) for a, (g | 0) for b. After reduction the rows
  // with a zero left half carry a basis of the intersection on the right.
  BinaryMatrix stacked(2 * n);
  const BitVec zero(n);
  for (const auto& g : a.generator().rows()) stacked.add_row(g.concat(g));
  for (const auto& g : b.generator().rows()) stacked.add_row(g.concat(zero));
  const auto reduced = rref_rank(stacked);

  BinaryMatrix sum(n);
  BinaryMatrix meet(n);
  for (const auto& row : reduced.rref.rows()) {
    BitVec left = row.slice(0, n);
    if (left.any()) {
      sum.add_row(std::move(left));
    } else {
      meet.add_row(row.slice(n, n));
    }
  }
  SumIntersection out{LinearCode(sum), LinearCode(meet)};
  if (out.sum.dimension() + out.intersection.dimension() != a.dimension() + b.dimension()) {
    throw CrossCheckError("sum_and_intersection: dimension identity violated");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weight distributions

WeightDistribution WeightDistribution::from_integers(const std::vector<long long>& counts) {
  std::vector<BigInt> big(counts.begin(), counts.end());
  return WeightDistribution(std::move(big));
}

WeightDistribution WeightDistribution::parse(const std::string& text) {
  std::string cleaned;
  for (char ch : text) cleaned += (ch == '[' || ch == ']' || ch == ',') ? ' ' : ch;
  std::istringstream in(cleaned);
  std::vector<BigInt> counts;
  std::string tok;
  while (in >> tok) {
    if (!std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw std::invalid_argument("weight distribution entry '" + tok + "' is not a non-negative integer");
    }
    counts.emplace_back(tok);
  }
  if (counts.empty()) throw std::invalid_argument("empty weight distribution");
  return WeightDistribution(std::move(counts));
}

BigInt WeightDistribution::total() const {
  BigInt t = 0;
  for (const auto& c : counts_) t += c;
  return t;
}

std::optional<std::size_t> WeightDistribution::min_nonzero_weight() const {
  for (std::size_t i = 1; i < counts_.size(); ++i) {
    if (counts_[i] != 0) return i;
  }
  return std::nullopt;
}

WeightDistribution WeightDistribution::reversed() const {
  std::vector<BigInt> r(counts_.rbegin(), counts_.rend());
  return WeightDistribution(std::move(r));
}

WeightDistribution WeightDistribution::operator+(const WeightDistribution& other) const {
  if (other.counts_.size() != counts_.size()) throw std::invalid_argument("weight distribution length mismatch");
  std::vector<BigInt> s = counts_;
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += other.counts_[i];
  return WeightDistribution(std::move(s));
}

bool WeightDistribution::is_palindromic() const { return counts_ == reversed().counts_; }

std::string WeightDistribution::to_bracket_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i != 0) out += ", ";
    out += counts_[i].str();
  }
  return out + "]";
}

std::string WeightDistribution::to_csv() const {
  std::string out = "weight,count\n";
  for (std::size_t i = 0; i < counts_.size(); ++i) out += std::to_string(i) + "," + counts_[i].str() + "\n";
  return out;
}

namespace {

using Counts = std::vector<std::uint64_t>;

// Walks the 2^m codewords start + span(rows[0..m)) in Gray order.
void gray_walk_word(const std::vector<std::uint64_t>& rows, std::size_t m, std::uint64_t start, Counts& counts) {
  std::uint64_t word = start;
  ++counts[static_cast<std::size_t>(std::popcount(word))];
  const std::uint64_t steps = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < steps; ++i) {
    word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    ++counts[static_cast<std::size_t>(std::popcount(word))];
  }
}

void gray_walk(const std::vector<BitVec>& rows, std::size_t m, BitVec word, Counts& counts) {
  ++counts[word.count()];
  const std::uint64_t steps = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < steps; ++i) {
    word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    ++counts[word.count()];
  }
}

}  // namespace

WeightDistribution weight_distribution(const LinearCode& c, const EnumerationOptions& opts) {
  const std::size_t n = c.length();
  const std::size_t k = c.dimension();
  if (k > opts.cap) {
    throw std::invalid_argument("weight_distribution: dimension " + std::to_string(k) + " exceeds enumeration cap " +
                                std::to_string(opts.cap) + "; raise it with --cap");
  }
  if (k >= 63) throw std::invalid_argument("weight_distribution: dimension must be below 63");

  const unsigned workers = resolve_threads(opts.threads);
  std::size_t fixed = 0;  // top message bits fixed per task
  while (workers > 1 && fixed < k && (std::size_t{1} << fixed) < 4 * static_cast<std::size_t>(workers)) ++fixed;
  const std::size_t free_bits = k - fixed;
  const std::size_t tasks = std::size_t{1} << fixed;
  const auto& rows = c.generator().rows();

  std::vector<Counts> partial(tasks, Counts(n + 1, 0));
  if (n <= 64) {
    std::vector<std::uint64_t> words;
    for (const auto& r : rows) words.push_back(r.to_mask());
    parallel_for(tasks, workers, [&](std::size_t t) {
      std::uint64_t start = 0;
      for (std::size_t b = 0; b < fixed; ++b) {
        if ((t >> b) & 1U) start ^= words[free_bits + b];
      }
      gray_walk_word(words, free_bits, start, partial[t]);
    });
  } else {
    parallel_for(tasks, workers, [&](std::size_t t) {
      BitVec start(n);
      for (std::size_t b = 0; b < fixed; ++b) {
        if ((t >> b) & 1U) start ^= rows[free_bits + b];
      }
      gray_walk(rows, free_bits, std::move(start), partial[t]);
    });
  }

  std::vector<BigInt> totals(n + 1, 0);
  for (const auto& part : partial) {
    for (std::size_t i = 0; i <= n; ++i) totals[i] += part[i];
  }
  return WeightDistribution(std::move(totals));
}

std::size_t min_distance(const LinearCode& c, const EnumerationOptions& opts) {
  if (c.dimension() == 0) throw std::invalid_argument("min_distance: undefined for the zero code");
  return *weight_distribution(c, opts).min_nonzero_weight();
}

namespace {

BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  BigInt b = 1;
  for (std::size_t i = 0; i < r; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

}  // namespace

WeightDistribution macwilliams(const WeightDistribution& w, std::size_t n, std::size_t k, unsigned q) {
  if (q < 2) throw std::invalid_argument("macwilliams: q must be at least 2");
  if (w.length() != n) throw std::invalid_argument("macwilliams: distribution length must be n + 1");
  const BigInt size = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k));
  if (w.total() != size) {
    throw std::invalid_argument("macwilliams: counts sum to " + w.total().str() + ", expected q^k = " + size.str());
  }
  std::vector<BigInt> qpow(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * (q - 1);

  std::vector<std::vector<BigInt>> binom(n + 1);
  for (std::size_t a = 0; a <= n; ++a) {
    binom[a].resize(a + 1);
    for (std::size_t b = 0; b <= a; ++b) binom[a][b] = binomial(a, b);
  }

  std::vector<BigInt> out(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (w[i] == 0) continue;
      // Krawtchouk K_j(i) = sum_s (-1)^s (q-1)^{j-s} C(i, s) C(n - i, j - s)
      BigInt kraw = 0;
      for (std::size_t s = 0; s <= std::min(i, j); ++s) {
        if (j - s > n - i) continue;
        BigInt term = binom[i][s] * binom[n - i][j - s] * qpow[j - s];
        if (s % 2 == 0) {
          kraw += term;
        } else {
          kraw -= term;
        }
      }
      acc += w[i] * kraw;
    }
    if (acc % size != 0 || acc < 0) {
      throw std::invalid_argument("macwilliams: input is not the distribution of a linear code");
    }
    out[j] = acc / size;
  }
  return WeightDistribution(std::move(out));
}

}  // namespace qqr
