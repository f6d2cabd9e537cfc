#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qqr/bounds.hpp"

using namespace qqr;

TEST_CASE("entropy") {
  CHECK(entropy(2, 0.5) == doctest::Approx(1.0));
  CHECK(entropy(2, 0.0) == 0.0);
  CHECK(entropy(3, 2.0 / 3.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(entropy(2, 0.6), std::invalid_argument);
  CHECK_THROWS_AS(entropy(2, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(entropy(1, 0.1), std::invalid_argument);
  double prev = entropy(2, 1e-6);
  for (int i = 1; i < 500; ++i) {
    const double h = entropy(2, i / 1000.0);
    CHECK(h > prev);
    prev = h;
  }
}

TEST_CASE("bisection roots") {
  const double g = gv_delta(0.5);
  CHECK(std::abs(1.0 - entropy(2, g) - 0.5) < 1e-10);
  CHECK(g == doctest::Approx(0.110).epsilon(0.005));
  const double m = mrrw_delta(0.5);
  CHECK(std::abs(mrrw_h(m) - 0.5) < 1e-10);
  CHECK(m == doctest::Approx(0.187).epsilon(0.005));
  CHECK(m > g);
  CHECK(2 * (1 - m) == doctest::Approx(1.626).epsilon(0.001));
  CHECK(gv_delta(0.25) == doctest::Approx(0.214).epsilon(0.005));
  CHECK_THROWS(gv_delta(0.0));
  CHECK_THROWS(mrrw_delta(1.0));
  const auto k = bound_constants();
  CHECK(k.gv_delta_half == g);
  CHECK(k.mrrw_c_half == doctest::Approx(1.626).epsilon(0.001));
}

TEST_CASE("hamming volume") {
  CHECK(hamming_volume(10, 0) == 1);
  CHECK(hamming_volume(10, 10) == 1024);
  CHECK(hamming_volume(10, 2) == 56);
  CHECK(hamming_volume(100, 100) == (BigInt(1) << 100));
  CHECK_THROWS_AS(hamming_volume(3, 4), std::invalid_argument);
  CHECK(gv_dimension(10, 3) == doctest::Approx(10 - std::log2(56.0)));
}

TEST_CASE("strategies parse") {
  CHECK(parse_strategy("greedy") == Strategy::greedy);
  CHECK(to_string(Strategy::random) == "random");
  CHECK_THROWS(parse_strategy("annealing"));
}

TEST_CASE("exhaustive search agrees with a brute-force maximum") {
  for (auto pv : {5ULL, 7ULL, 11ULL}) {
    const Prime p(pv);
    std::int64_t best = -1;
    std::uint64_t best_mask = 0;
    for (std::uint64_t m = 1; m < (1ULL << pv); ++m) {
      std::vector<std::uint64_t> s;
      for (std::uint64_t a = 0; a < pv; ++a)
        if ((m >> a) & 1U) s.push_back(a);
      const auto t = oracle::curve_points(s, pv);
      if (t > best) best = t, best_mask = m;
    }
    auto r = max_point_count_search(p);
    CHECK(r.best_total == best);
    CHECK(r.best.bits().to_mask() == best_mask);
    SearchOptions threaded;
    threaded.threads = 4;
    auto rt = max_point_count_search(p, threaded);
    CHECK(rt.best == r.best);
  }
  auto r11 = max_point_count_search(Prime(11));
  CHECK(3 * r11.best_total > 5 * 11 - 12);
}

TEST_CASE("exhaustive maximum is affine invariant") {
  for (auto pv : {5ULL, 7ULL, 11ULL}) {
    const Prime p(pv);
    FastPointCounter counter(p);
    const auto best = max_point_count_search(p).best_total;
    for (std::uint64_t u = 1; u < pv; ++u) {
      for (std::uint64_t v = 0; v < pv; ++v) {
        std::int64_t m = -1;
        for (std::uint64_t mask = 1; mask < (1ULL << pv); ++mask)
          m = std::max(m, counter.total(Subset::from_mask(p, mask).affine_image(u, v).bits()));
        REQUIRE(m == best);
      }
    }
  }
}

TEST_CASE("sampling strategies") {
  for (auto pv : {7ULL, 11ULL, 13ULL}) {
    const Prime p(pv);
    const auto exact = max_point_count_search(p).best_total;
    for (auto st : {Strategy::random, Strategy::greedy}) {
      SearchOptions o;
      o.strategy = st;
      o.budget = 500;
      o.seed = 42;
      auto a = max_point_count_search(p, o);
      CHECK(a.best_total <= exact);
      CHECK(a.best_total == point_count(a.best).total);
      CHECK(a.seed == 42);
      o.threads = 3;
      auto b = max_point_count_search(p, o);
      CHECK(a.best == b.best);
      CHECK(a.best_total == b.best_total);
    }
  }
  SearchOptions big;
  big.strategy = Strategy::random;
  big.budget = 2000;
  auto r = max_point_count_search(Prime(131), big);
  CHECK(r.best_total <= 2 * 131 + 2);
  SearchOptions none;
  none.strategy = Strategy::random;
  none.budget = 0;
  CHECK_THROWS(max_point_count_search(Prime(7), none));
  CHECK_THROWS(max_point_count_search(Prime(29)));  // above the exhaustive cap
}

TEST_CASE("voloch lower bound for the search") {
  for (auto pv : {11ULL, 17ULL, 19ULL}) {
    CHECK(max_point_count_search(Prime(pv)).best_total >= voloch_q_count(Prime(pv)).total);
  }
}

TEST_CASE("B statement") {
  for (auto pv : {5ULL, 7ULL, 11ULL, 13ULL}) {
    auto b = b_statement(Prime(pv), 2.0 + 2.0 / static_cast<double>(pv));
    CHECK(b.decided);
    CHECK(b.holds_so_far);
  }
  const Prime p(11);
  const double c_min = (5.0 / 3.0) - 4.0 / 11.0;
  auto refuted = b_statement(p, c_min);
  CHECK_FALSE(refuted.holds_so_far);
  REQUIRE(refuted.witness.has_value());
  CHECK(static_cast<double>(point_count(*refuted.witness).total) > c_min * 11);
  const auto best = max_point_count_search(p).best_total;
  auto tight = b_statement(p, static_cast<double>(best) / 11.0);
  CHECK(tight.holds_so_far);
  CHECK(tight.max_seen == best);
  CHECK_THROWS(b_statement(p, 0.0));
}

TEST_CASE("tarnanen window") {
  auto r = tarnanen_window(Prime(11), 0.5);
  CHECK(r.exhaustive);
  std::uint64_t expected = 0;
  for (int m = 1; m <= 5; ++m) {
    std::uint64_t c = 1;
    for (int i = 0; i < m; ++i) c = c * (11 - i) / (i + 1);
    expected += c;
  }
  CHECK(r.checked == expected);
  if (r.witness) {
    const auto t = static_cast<double>(point_count(*r.witness).total);
    CHECK((t <= 0.42 * 11 || t >= 1.42 * 11));
    CHECK(r.witness->size() > 1);
  }
  auto r13 = tarnanen_window(Prime(13), 0.4);
  CHECK(r13.exhaustive);
  CHECK_THROWS(tarnanen_window(Prime(13), 1.0));
}

TEST_CASE("search determinism") {
  SearchOptions o;
  o.strategy = Strategy::random;
  o.budget = 1000;
  o.seed = 7;
  auto a = max_point_count_search(Prime(101), o);
  auto b = max_point_count_search(Prime(101), o);
  CHECK(a.best == b.best);
  CHECK(a.samples == b.samples);
}
