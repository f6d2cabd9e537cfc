#include "qqr/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "qqr/parallel.hpp"

namespace qqr {

double entropy(unsigned q, double delta) {
  if (q < 2) throw std::invalid_argument("entropy: q must be at least 2");
  const double upper = 1.0 - 1.0 / q;
  if (!(delta >= 0.0) || delta > upper + 1e-15) {
    throw std::invalid_argument("entropy: delta must lie in [0, 1 - 1/q]");
  }
  if (delta == 0.0) return 0.0;
  const double lq = std::log(static_cast<double>(q));
  double h = delta * std::log(static_cast<double>(q - 1)) / lq - delta * std::log(delta) / lq;
  if (delta < 1.0) h -= (1.0 - delta) * std::log(1.0 - delta) / lq;
  return h;
}

namespace {

// Root of a strictly decreasing f on (lo, hi) with f(lo) > target > f(hi).
template <class F>
double bisect_decreasing(F&& f, double target, double lo, double hi) {
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void require_rate(double rate, const char* op) {
  if (!(rate > 0.0 && rate < 1.0)) throw std::invalid_argument(std::string(op) + ": rate must lie in (0, 1)");
}

}  // namespace

double gv_delta(double rate) {
  require_rate(rate, "gv_delta");
  return bisect_decreasing([](double d) { return 1.0 - entropy(2, d); }, rate, 0.0, 0.5);
}

double mrrw_h(double delta) {
  if (!(delta >= 0.0 && delta <= 0.5)) throw std::invalid_argument("mrrw_h: delta must lie in [0, 1/2]");
  const double x = std::max(0.0, 0.5 - std::sqrt(delta * (1.0 - delta)));
  return entropy(2, x);
}

double mrrw_delta(double rate) {
  require_rate(rate, "mrrw_delta");
  return bisect_decreasing(mrrw_h, rate, 0.0, 0.5);
}

BigInt hamming_volume(std::size_t n, std::size_t r) {
  if (r > n) throw std::invalid_argument("hamming_volume: radius exceeds length");
  BigInt v = 0;
  BigInt binom = 1;
  for (std::size_t i = 0; i <= r; ++i) {
    v += binom;
    binom = binom * (n - i) / (i + 1);
  }
  return v;
}

double gv_dimension(std::size_t n, std::size_t d) {
  if (d == 0 || d > n + 1) throw std::invalid_argument("gv_dimension: need 1 <= d <= n + 1");
  BigInt v = hamming_volume(n, d - 1);
  const std::size_t top = boost::multiprecision::msb(v);
  std::size_t shift = top > 52 ? top - 52 : 0;
  v >>= shift;
  return static_cast<double>(n) - (std::log2(v.convert_to<double>()) + static_cast<double>(shift));
}

BoundConstants bound_constants() {
  BoundConstants c{};
  c.gv_delta_half = gv_delta(0.5);
  c.mrrw_delta_half = mrrw_delta(0.5);
  c.mrrw_c_half = 2.0 * (1.0 - c.mrrw_delta_half);
  c.gv_c_half = 2.0 * (1.0 - c.gv_delta_half);
  c.gv_delta_quarter = gv_delta(0.25);
  c.gv_c_quarter = 2.0 * (1.0 - c.gv_delta_quarter);
  c.mrrw_delta_quarter = mrrw_delta(0.25);
  c.mrrw_c_quarter = 2.0 * (1.0 - c.mrrw_delta_quarter);
  return c;
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::exhaustive: return "exhaustive";
    case Strategy::random: return "random";
    case Strategy::greedy: return "greedy";
  }
  return "unknown";
}

Strategy parse_strategy(const std::string& name) {
  if (name == "exhaustive") return Strategy::exhaustive;
  if (name == "random") return Strategy::random;
  if (name == "greedy") return Strategy::greedy;
  throw std::invalid_argument("unknown strategy '" + name + "' (expected exhaustive, random or greedy)");
}

bool numeric_less(const BitVec& a, const BitVec& b) {
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = wa.size(); i-- > 0;) {
    if (wa[i] != wb[i]) return wa[i] < wb[i];
  }
  return false;
}

namespace {

constexpr std::size_t kRandomStreams = 16;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Best {
  BitVec subset;
  std::int64_t total = -1;

  void offer(const BitVec& s, std::int64_t t) {
    if (t > total || (t == total && numeric_less(s, subset))) {
      subset = s;
      total = t;
    }
  }
};

BitVec random_nonempty(std::size_t p, std::mt19937_64& rng) {
  for (;;) {
    BitVec s(p);
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < p; ++i) {
      if (i % 64 == 0) bits = rng();
      if (bits & 1U) s.set(i);
      bits >>= 1U;
    }
    if (s.any()) return s;
  }
}

BitVec random_of_size(std::size_t p, std::size_t m, std::mt19937_64& rng) {
  std::vector<std::size_t> idx(p);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  BitVec s(p);
  for (std::size_t i = 0; i < m; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, p - 1);
    std::swap(idx[i], idx[pick(rng)]);
    s.set(idx[i]);
  }
  return s;
}

std::uint64_t stream_budget(std::uint64_t budget, std::size_t stream) {
  return budget / kRandomStreams + (stream < budget % kRandomStreams ? 1 : 0);
}

SearchResult exhaustive_search(const Prime& p, const SearchOptions& opts) {
  const std::uint64_t n = p.value();
  if (n > opts.exhaustive_cap || n >= 63) {
    throw std::invalid_argument("exhaustive search: p = " + std::to_string(n) + " exceeds the exhaustive cap " +
                                std::to_string(opts.exhaustive_cap));
  }
  const FastPointCounter counter(p);
  const std::uint64_t limit = std::uint64_t{1} << n;
  const std::size_t tasks = std::min<std::uint64_t>(256, limit);
  const std::uint64_t chunk = (limit + tasks - 1) / tasks;

  struct Local {
    std::uint64_t mask = 0;
    std::int64_t total = -1;
  };
  std::vector<Local> locals(tasks);
  parallel_for(tasks, opts.threads, [&](std::size_t t) {
    const std::uint64_t lo = std::max<std::uint64_t>(1, t * chunk);
    const std::uint64_t hi = std::min(limit, (t + 1) * chunk);
    Local best;
    for (std::uint64_t m = lo; m < hi; ++m) {
      const std::int64_t total = counter.total_mask(m);
      if (total > best.total) best = {m, total};  // ascending m keeps the smallest on ties
    }
    locals[t] = best;
  });

  Local best;
  for (const auto& l : locals) {
    if (l.total > best.total || (l.total == best.total && l.mask < best.mask)) best = l;
  }
  return {p, Subset::from_mask(p, best.mask), best.total, Strategy::exhaustive, limit - 1, opts.seed};
}

SearchResult random_search(const Prime& p, const SearchOptions& opts) {
  const FastPointCounter counter(p);
  std::vector<Best> bests(kRandomStreams);
  parallel_for(kRandomStreams, opts.threads, [&](std::size_t stream) {
    std::mt19937_64 rng(splitmix64(opts.seed + stream));
    const std::uint64_t budget = stream_budget(opts.budget, stream);
    for (std::uint64_t i = 0; i < budget; ++i) {
      BitVec s = random_nonempty(p.value(), rng);
      const std::int64_t t = counter.total(s);
      bests[stream].offer(s, t);
    }
  });
  Best best;
  for (const auto& b : bests) {
    if (b.total >= 0) best.offer(b.subset, b.total);
  }
  if (best.total < 0) throw std::invalid_argument("random search: budget must be positive");
  return {p, Subset(p, best.subset), best.total, Strategy::random, opts.budget, opts.seed};
}

SearchResult greedy_search(const Prime& p, const SearchOptions& opts) {
  const FastPointCounter counter(p);
  const std::size_t n = p.value();
  std::mt19937_64 rng(splitmix64(opts.seed));
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  Best best;
  std::uint64_t used = 0;
  while (used < opts.budget) {
    BitVec s(n);
    s.set(pick(rng));
    best.offer(s, counter.total(s));
    ++used;
    while (used < opts.budget && s.count() < n) {
      std::int64_t step_total = -1;
      std::size_t step_elem = n;
      for (std::size_t e = 0; e < n && used < opts.budget; ++e) {
        if (s.test(e)) continue;
        s.set(e);
        const std::int64_t t = counter.total(s);
        ++used;
        best.offer(s, t);
        s.set(e, false);
        if (t > step_total) {
          step_total = t;
          step_elem = e;
        }
      }
      if (step_elem == n) break;
      s.set(step_elem);
    }
  }
  if (best.total < 0) throw std::invalid_argument("greedy search: budget must be positive");
  return {p, Subset(p, best.subset), best.total, Strategy::greedy, used, opts.seed};
}

}  // namespace

SearchResult max_point_count_search(const Prime& p, const SearchOptions& opts) {
  switch (opts.strategy) {
    case Strategy::exhaustive: return exhaustive_search(p, opts);
    case Strategy::random: return random_search(p, opts);
    case Strategy::greedy: return greedy_search(p, opts);
  }
  throw std::invalid_argument("unknown strategy");
}

BStatementResult b_statement(const Prime& p, double c, const SearchOptions& opts) {
  if (!(c > 0.0)) throw std::invalid_argument("b_statement: c must be positive");
  const auto result = max_point_count_search(p, opts);
  const double bound = c * static_cast<double>(p.value());
  BStatementResult out{opts.strategy == Strategy::exhaustive, true, std::nullopt, result.best_total};
  if (static_cast<double>(result.best_total) > bound) {
    out.holds_so_far = false;
    out.witness = result.best;
  }
  return out;
}

TarnanenResult tarnanen_window(const Prime& p, double tau, const SearchOptions& opts) {
  if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("tarnanen_window: tau must lie in (0, 1)");
  const std::uint64_t n = p.value();
  const auto max_size = static_cast<std::size_t>(std::floor(tau * static_cast<double>(n)));
  const double lo = 0.42 * static_cast<double>(n);
  const double hi = 1.42 * static_cast<double>(n);
  const auto inside = [&](std::int64_t t) {
    const auto v = static_cast<double>(t);
    return lo < v && v < hi;
  };
  const FastPointCounter counter(p);

  TarnanenResult out;
  out.all_in_window = true;
  if (max_size == 0) return out;

  if (opts.strategy == Strategy::exhaustive) {
    if (n > opts.exhaustive_cap || n >= 63) {
      throw std::invalid_argument("tarnanen_window: p exceeds the exhaustive cap");
    }
    out.exhaustive = true;
    const std::uint64_t limit = std::uint64_t{1} << n;
    const std::size_t tasks = std::min<std::uint64_t>(256, limit);
    const std::uint64_t chunk = (limit + tasks - 1) / tasks;
    struct Local {
      std::uint64_t witness = 0;
      std::int64_t total = 0;
      std::uint64_t checked = 0;
    };
    std::vector<Local> locals(tasks);
    parallel_for(tasks, opts.threads, [&](std::size_t t) {
      const std::uint64_t begin = std::max<std::uint64_t>(1, t * chunk);
      const std::uint64_t end = std::min(limit, (t + 1) * chunk);
      Local& local = locals[t];
      for (std::uint64_t m = begin; m < end; ++m) {
        if (static_cast<std::size_t>(std::popcount(m)) > max_size) continue;
        ++local.checked;
        const std::int64_t total = counter.total_mask(m);
        if (local.witness == 0 && !inside(total)) local = {m, total, local.checked};
      }
    });
    for (const auto& l : locals) {
      out.checked += l.checked;
      if (l.witness != 0 && out.all_in_window) {
        out.all_in_window = false;
        out.witness = Subset::from_mask(p, l.witness);
        out.witness_total = l.total;
      }
    }
    return out;
  }

  out.exhaustive = false;
  std::mt19937_64 rng(splitmix64(opts.seed));
  std::uniform_int_distribution<std::size_t> size_pick(1, max_size);
  for (std::uint64_t i = 0; i < opts.budget; ++i) {
    BitVec s = random_of_size(n, size_pick(rng), rng);
    ++out.checked;
    const std::int64_t total = counter.total(s);
    if (!inside(total)) {
      out.all_in_window = false;
      out.witness = Subset(p, s);
      out.witness_total = total;
      break;
    }
  }
  return out;
}

}  // namespace qqr
