#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qqr/field.hpp"
#include "qqr/numeric.hpp"

namespace qqr {

/// q-ary entropy H_q(delta) on [0, 1 - 1/q], with H_q(0) = 0.
double entropy(unsigned q, double delta);

/// Root of 1 - H_2(delta) = rate on (0, 1/2).
double gv_delta(double rate);

/// First MRRW bound h(delta) = H_2(1/2 - sqrt(delta (1 - delta))).
double mrrw_h(double delta);

/// Root of h(delta) = rate on the decreasing branch (0, 1/2).
double mrrw_delta(double rate);

/// V(n, r) = sum_{i <= r} C(n, i).
BigInt hamming_volume(std::size_t n, std::size_t r);

/// n - log2 V(n, d - 1): the dimension guaranteed by the GV bound.
double gv_dimension(std::size_t n, std::size_t d);

/// The rate-1/2 and rate-1/4 thresholds tied to the QQR and LQR families.
struct BoundConstants {
  double gv_delta_half;        // ~0.110
  double mrrw_delta_half;      // ~0.187
  double mrrw_c_half;          // 2 (1 - mrrw_delta_half) ~1.626
  double gv_c_half;            // 2 (1 - gv_delta_half)   ~1.78
  double gv_delta_quarter;     // ~0.214
  double gv_c_quarter;         // 2 (1 - gv_delta_quarter) ~1.57
  double mrrw_delta_quarter;   // ~0.300
  double mrrw_c_quarter;       // 2 (1 - mrrw_delta_quarter) ~1.40
};
BoundConstants bound_constants();

enum class Strategy { exhaustive, random, greedy };
std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& name);

struct SearchOptions {
  Strategy strategy = Strategy::exhaustive;
  std::uint64_t budget = 100000;   // point-count evaluations for sampling strategies
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::uint64_t exhaustive_cap = 24;  // largest p searched exhaustively
};

struct SearchResult {
  Prime p;
  Subset best;
  std::int64_t best_total;
  Strategy strategy;
  std::uint64_t samples;
  std::uint64_t seed;
};

/// Largest |X_S(GF(p))| over non-empty S found by the chosen strategy. Ties
/// go to the numerically smallest subset (bit i has value 2^i).
SearchResult max_point_count_search(const Prime& p, const SearchOptions& opts = {});

/// True when a precedes b in numeric order (bit i weighted 2^i).
bool numeric_less(const BitVec& a, const BitVec& b);

struct BStatementResult {
  bool decided;                    // exhaustive: the verdict is exact
  bool holds_so_far;               // no S with |X_S| > c p was found
  std::optional<Subset> witness;   // an S with |X_S| > c p
  std::int64_t max_seen;
};

/// B(c, p): |X_S(GF(p))| <= c p for every non-empty S.
BStatementResult b_statement(const Prime& p, double c, const SearchOptions& opts = {});

struct TarnanenResult {
  bool exhaustive;
  bool all_in_window;
  std::optional<Subset> witness;
  std::int64_t witness_total = 0;
  std::uint64_t checked = 0;
};

/// Whether every non-empty S with |S| <= tau p has 0.42p < |X_S| < 1.42p.
TarnanenResult tarnanen_window(const Prime& p, double tau, const SearchOptions& opts = {});

}  // namespace qqr
