#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qqr/families.hpp"
#include "qqr/gf2linalg.hpp"

using namespace qqr;

namespace {

std::vector<std::uint64_t> as_u64(const WeightDistribution& w) {
  std::vector<std::uint64_t> v;
  for (const auto& c : w.counts()) v.push_back(c.convert_to<std::uint64_t>());
  return v;
}

LinearCode repetition(std::size_t n) {
  BinaryMatrix m(n);
  m.add_row(BitVec::ones(n));
  return LinearCode(m);
}

}  // namespace

TEST_CASE("bitvec basics") {
  auto v = BitVec::from_string("0101");
  CHECK(v.count() == 2);
  CHECK(v.to_string() == "0101");
  CHECK(v.to_tuple() == "(0, 1, 0, 1)");
  CHECK(v.rotated(1).to_string() == "1010");
  CHECK(v.complement().to_string() == "1010");
  CHECK(v.concat(BitVec::from_string("11")).to_string() == "010111");
  CHECK(v.concat(BitVec::from_string("11")).slice(3, 3).to_string() == "111");
  CHECK_THROWS(BitVec::from_string("012"));
  CHECK_THROWS(v.slice(3, 2));
  // rotation across word boundaries
  BitVec w(131);
  w.set(130);
  CHECK(w.rotated(1).first_set() == 0);
  CHECK(w.rotated(5).test(4));
  CHECK(BitVec::ones(100).count() == 100);
}

TEST_CASE("rref_rank") {
  auto id = BinaryMatrix::identity(6);
  auto r = rref_rank(id);
  CHECK(r.rank == 6);
  CHECK(r.rref == id);
  auto dup = BinaryMatrix::from_text("1011\n1011\n");
  CHECK(rref_rank(dup).rank == 1);
  CHECK(rref_rank(BinaryMatrix(5)).rank == 0);
  CHECK_THROWS(BinaryMatrix::from_text("101\n11\n"));

  const Prime p(13);
  const QqrContext ctx(p);
  BinaryMatrix gens(26);
  for (std::uint64_t i = 0; i < 13; ++i) gens.add_row(ctx.vector(Subset::from_elements(p, {i})));
  CHECK(rref_rank(gens).rank == 12);
}

TEST_CASE("rank against independent oracle") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng() % 12;
    const std::size_t cols = 1 + rng() % 80;
    auto m = oracle::random_matrix(rows, cols, rng);
    std::vector<std::vector<int>> dense(rows, std::vector<int>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) dense[i][j] = m.row(i).test(j);
    REQUIRE(rref_rank(m).rank == oracle::gf2_rank(dense));
  }
}

TEST_CASE("dual") {
  CHECK(dual(LinearCode::full(7)) == LinearCode::zero(7));
  CHECK(dual(LinearCode::zero(7)) == LinearCode::full(7));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 70;
    LinearCode c(oracle::random_matrix(rng() % (n + 1), n, rng));
    const LinearCode d = dual(c);
    REQUIRE(d.dimension() + c.dimension() == n);
    for (const auto& g : c.generator().rows())
      for (const auto& h : d.generator().rows()) REQUIRE_FALSE(g.dot(h));
    REQUIRE(dual(d) == c);
  }
  const LinearCode c7 = build_qqr(Prime(7));
  CHECK(dual(c7) == c7);
}

TEST_CASE("weight_distribution examples") {
  CHECK(weight_distribution(build_qqr(Prime(5))).to_bracket_string() == "[1, 0, 0, 0, 5, 0, 10, 0, 0, 0, 0]");
  CHECK(weight_distribution(build_qqr(Prime(7))).to_bracket_string() ==
        "[1, 0, 0, 0, 14, 0, 49, 0, 49, 0, 14, 0, 0, 0, 1]");
  CHECK(weight_distribution(build_qqr(Prime(11))).to_bracket_string() ==
        "[1, 0, 0, 0, 0, 0, 77, 0, 330, 0, 616, 0, 616, 0, 330, 0, 77, 0, 0, 0, 0, 0, 1]");
  EnumerationOptions small;
  small.cap = 5;
  CHECK_THROWS_WITH_AS(weight_distribution(build_qqr(Prime(7)), small), doctest::Contains("--cap"),
                       std::invalid_argument);
  CHECK(weight_distribution(LinearCode::zero(4)).to_bracket_string() == "[1, 0, 0, 0, 0]");
}

TEST_CASE("Gray-code enumeration agrees with naive re-encoding") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 150;  // crosses the single-word path
    const std::size_t k = rng() % 15;
    LinearCode c(oracle::random_matrix(k, n, rng));
    const auto w = weight_distribution(c);
    REQUIRE(as_u64(w) == oracle::naive_distribution(c.generator()));
    REQUIRE(w.total() == (BigInt(1) << c.dimension()));
    EnumerationOptions threaded;
    threaded.threads = 3;
    REQUIRE(weight_distribution(c, threaded) == w);
  }
}

TEST_CASE("min_distance") {
  CHECK(min_distance(build_qqr(Prime(7))) == 4);
  CHECK(min_distance(build_extended_qqr(Prime(13))) == 6);
  for (std::size_t n : {1, 5, 17, 90}) CHECK(min_distance(repetition(n)) == n);
  CHECK_THROWS_AS(min_distance(LinearCode::zero(5)), std::invalid_argument);
}

TEST_CASE("min_distance spot check through parity-check columns") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 4 + rng() % 9;
    const std::size_t k = 1 + rng() % std::min<std::size_t>(n - 1, 10);
    LinearCode c(oracle::random_matrix(k, n, rng));
    if (c.dimension() == 0) continue;
    const auto h = dual(c).generator();
    const std::size_t d = min_distance(c);
    // d is the smallest number of dependent parity-check columns
    std::size_t smallest = n + 1;
    for (std::uint64_t cols = 1; cols < (std::uint64_t{1} << n); ++cols) {
      BitVec sum(h.row_count());
      for (std::size_t j = 0; j < n; ++j)
        if ((cols >> j) & 1U)
          for (std::size_t i = 0; i < h.row_count(); ++i)
            if (h.row(i).test(j)) sum.flip(i);
      if (sum.none()) smallest = std::min<std::size_t>(smallest, std::popcount(cols));
    }
    REQUIRE(d == smallest);
  }
}

TEST_CASE("macwilliams") {
  const auto full = weight_distribution(LinearCode::full(6));
  const auto zero = weight_distribution(LinearCode::zero(6));
  CHECK(macwilliams(full, 6, 6) == zero);
  CHECK(macwilliams(zero, 6, 0) == full);
  const auto ext13 = WeightDistribution::parse(
      "[1, 0, 0, 0, 0, 0, 39, 0, 455, 0, 1196, 0, 2405, 0, 2405, 0, 1196, 0, 455, 0, 39, 0, 0, 0, 0, 0, 1]");
  CHECK(macwilliams(ext13, 26, 13) == ext13);
  CHECK_THROWS_AS(macwilliams(WeightDistribution::parse("[1, 1, 1]"), 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(macwilliams(WeightDistribution::parse("[1, 3]"), 1, 2), std::invalid_argument);
  CHECK_THROWS(WeightDistribution::parse("[1, -2]"));

  std::mt19937_64 rng(13);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 16;
    LinearCode c(oracle::random_matrix(rng() % (n + 1), n, rng));
    const auto w = weight_distribution(c);
    const auto brute = oracle::brute_dual_distribution(c.generator());
    REQUIRE(as_u64(macwilliams(w, n, c.dimension())) == brute);
    REQUIRE(macwilliams(w, n, c.dimension()) == weight_distribution(dual(c)));
  }
}

TEST_CASE("q-ary macwilliams") {
  // [4, 2] ternary tetracode is self-dual: A = 1, 0, 0, 8, 0
  auto tetra = WeightDistribution::from_integers({1, 0, 0, 8, 0});
  CHECK(macwilliams(tetra, 4, 2, 3) == tetra);
  // [3, 1] ternary repetition <-> its dual, the zero-sum code
  auto rep = WeightDistribution::from_integers({1, 0, 0, 2});
  CHECK(macwilliams(rep, 3, 1, 3) == WeightDistribution::from_integers({1, 0, 6, 2}));
}

TEST_CASE("sum and intersection") {
  const LinearCode c13 = build_qqr(Prime(13));
  const auto si = sum_and_intersection(c13, dual(c13));
  CHECK(si.sum == LinearCode::full(26));
  CHECK(si.intersection.dimension() == 0);
  const LinearCode c7 = build_qqr(Prime(7));
  CHECK(sum_and_intersection(c7, dual(c7)).intersection == c7);
  CHECK(sum_and_intersection(c13, c13).sum == c13);
  CHECK(sum_and_intersection(c13, c13).intersection == c13);
  CHECK_THROWS_AS(sum_and_intersection(c7, c13), std::invalid_argument);

  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 40;
    LinearCode a(oracle::random_matrix(rng() % n, n, rng));
    LinearCode b(oracle::random_matrix(rng() % n, n, rng));
    const auto r = sum_and_intersection(a, b);
    for (const auto& g : r.intersection.generator().rows()) REQUIRE((a.contains(g) && b.contains(g)));
    for (const auto& g : a.generator().rows()) REQUIRE(r.sum.contains(g));
    for (const auto& g : b.generator().rows()) REQUIRE(r.sum.contains(g));
    REQUIRE(r.sum.dimension() + r.intersection.dimension() == a.dimension() + b.dimension());
  }
}

TEST_CASE("weight distribution text") {
  auto w = WeightDistribution::parse("[1, 0, 3]");
  CHECK(w.to_bracket_string() == "[1, 0, 3]");
  CHECK(w.to_csv() == "weight,count\n0,1\n1,0\n2,3\n");
  CHECK(w.reversed().to_bracket_string() == "[3, 0, 1]");
  CHECK((w + w.reversed()).is_palindromic());
  CHECK(w.min_nonzero_weight() == 2);
}
