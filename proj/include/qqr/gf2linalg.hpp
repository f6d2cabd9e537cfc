#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qqr/bitvec.hpp"
#include "qqr/numeric.hpp"

namespace qqr {

/// Rows of a common length n over GF(2).
class BinaryMatrix {
 public:
  explicit BinaryMatrix(std::size_t cols) : cols_(cols) {}
  BinaryMatrix(std::size_t cols, std::vector<BitVec> rows);

  static BinaryMatrix identity(std::size_t n);
  /// One row per line, characters '0'/'1'. Blank lines are skipped.
  static BinaryMatrix from_text(const std::string& text);

  std::size_t cols() const noexcept { return cols_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  const std::vector<BitVec>& rows() const noexcept { return rows_; }
  const BitVec& row(std::size_t i) const { return rows_.at(i); }
  void add_row(BitVec row);

  std::string to_text() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t cols_;
  std::vector<BitVec> rows_;
};

struct RrefResult {
  BinaryMatrix rref;  // nonzero rows only
  std::size_t rank;
  std::vector<std::size_t> pivots;  // strictly increasing
};

RrefResult rref_rank(const BinaryMatrix& m);

/// A binary [n, k] code held as its reduced row-echelon generator matrix,
/// so two codes are equal iff their generators are.
class LinearCode {
 public:
  explicit LinearCode(const BinaryMatrix& generators);

  static LinearCode zero(std::size_t n) { return LinearCode(BinaryMatrix(n)); }
  static LinearCode full(std::size_t n) { return LinearCode(BinaryMatrix::identity(n)); }

  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return generator_.row_count(); }
  const BinaryMatrix& generator() const noexcept { return generator_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const BitVec& word) const;
  /// Sum of generator rows selected by `message` (length k).
  BitVec encode(const BitVec& message) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.generator_ == b.generator_; }

 private:
  BinaryMatrix generator_;
  std::vector<std::size_t> pivots_;
};

LinearCode dual(const LinearCode& c);

struct SumIntersection {
  LinearCode sum;
  LinearCode intersection;
};

SumIntersection sum_and_intersection(const LinearCode& a, const LinearCode& b);

/// Exact codeword counts A_0..A_n.
class WeightDistribution {
 public:
  WeightDistribution() = default;
  explicit WeightDistribution(std::vector<BigInt> counts) : counts_(std::move(counts)) {}
  static WeightDistribution from_integers(const std::vector<long long>& counts);
  /// Parses "[1, 0, 0, 5]".
  static WeightDistribution parse(const std::string& text);

  std::size_t length() const noexcept { return counts_.empty() ? 0 : counts_.size() - 1; }
  const std::vector<BigInt>& counts() const noexcept { return counts_; }
  const BigInt& operator[](std::size_t i) const { return counts_.at(i); }
  BigInt total() const;
  /// Smallest i > 0 with A_i != 0.
  std::optional<std::size_t> min_nonzero_weight() const;

  WeightDistribution reversed() const;
  WeightDistribution operator+(const WeightDistribution& other) const;
  bool is_palindromic() const;

  /// "[a0, a1, ..., an]".
  std::string to_bracket_string() const;
  /// "weight,count" header followed by one line per weight.
  std::string to_csv() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

 private:
  std::vector<BigInt> counts_;
};

struct EnumerationOptions {
  std::size_t cap = 26;    // largest k enumerated exhaustively
  unsigned threads = 0;    // 0: one per logical core
};

/// Gray-code walk over all 2^k codewords.
WeightDistribution weight_distribution(const LinearCode& c, const EnumerationOptions& opts = {});

/// Throws for the zero code.
std::size_t min_distance(const LinearCode& c, const EnumerationOptions& opts = {});

/// Distribution of the dual of an [n, k]_q code with distribution w.
WeightDistribution macwilliams(const WeightDistribution& w, std::size_t n, std::size_t k, unsigned q = 2);

}  // namespace qqr
