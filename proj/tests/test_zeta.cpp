#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qqr/families.hpp"
#include "qqr/zeta.hpp"

using namespace qqr;

namespace {

const std::vector<std::string> kP7 = {"2/143", "4/143", "19/429", "28/429", "40/429",
                                      "56/429", "76/429", "32/143", "32/143"};
const std::vector<std::string> kP13 = {"3/17710",     "6/8855",        "611/336490",   "9/2185",
                                       "3441/408595", "6448/408595",   "44499/1634380", "22539/520030",
                                       "66303/1040060", "22539/260015", "44499/408595",  "51584/408595",
                                       "55056/408595", "288/2185",     "19552/168245", "768/8855",
                                       "384/8855"};

WeightDistribution qqr7() { return weight_distribution(build_qqr(Prime(7))); }
WeightDistribution ext13() { return weight_distribution(build_extended_qqr(Prime(13))); }

}  // namespace

TEST_CASE("rational polynomial") {
  auto p = RationalPoly::parse({"1/2", "0", "3", "0"});
  CHECK(p.degree() == 2);
  CHECK(p(Rational(2)) == Rational(25, 2));
  CHECK(p.to_string() == "1/2 + 3/1*T^2");
  CHECK(RationalPoly().degree() == -1);
  CHECK_THROWS(parse_fraction("1/x"));
  CHECK(parse_fraction("-6/4") == Rational(-3, 2));
}

TEST_CASE("duursma_p reproduces the printed polynomials") {
  const auto p7 = duursma_p(qqr7(), 14, 7);
  CHECK(p7 == RationalPoly::parse(kP7));
  CHECK(p7.degree() == 8);
  CHECK(p7(Rational(1)) == 1);
  const auto p13 = duursma_p(ext13(), 26, 13);
  CHECK(p13 == RationalPoly::parse(kP13));
  CHECK(p13.degree() == 16);
  CHECK(p13.coefficient(0) == Rational(3, 17710));
  CHECK(p13.coefficient(16) == Rational(384, 8855));
  // the printed coefficients themselves sum to 1
  CHECK(RationalPoly::parse(kP7)(Rational(1)) == 1);
  CHECK(RationalPoly::parse(kP13)(Rational(1)) == 1);
}

TEST_CASE("duursma_p exactness: substituting back reproduces the enumerator") {
  struct Case {
    WeightDistribution w;
    std::size_t n, k;
  };
  std::vector<Case> cases = {{qqr7(), 14, 7}, {ext13(), 26, 13}};
  for (auto pv : {11ULL, 13ULL, 17ULL}) {
    auto c = build_qqr(Prime(pv));
    cases.push_back({weight_distribution(c), c.length(), c.dimension()});
  }
  for (const auto& c : cases) {
    const auto poly = duursma_p(c.w, c.n, c.k);
    const std::size_t d = *c.w.min_nonzero_weight();
    const auto lhs = duursma_enumerator(poly, c.n, d);
    for (std::size_t i = 0; i <= c.n; ++i) {
      const Rational expected = i == 0 ? Rational(0) : Rational(c.w[i]);
      REQUIRE(lhs[i] == expected);
    }
    CHECK(poly(Rational(1)) == 1);
  }
}

TEST_CASE("duursma_p error paths") {
  // d = 1: the full space
  CHECK_THROWS_AS(duursma_p(weight_distribution(LinearCode::full(4)), 4, 4), std::invalid_argument);
  // d_dual = 1: repetition code has d_dual = 2, so use a code with a zero coordinate
  BinaryMatrix m(4);
  m.add_row(BitVec::from_string("1100"));
  m.add_row(BitVec::from_string("0110"));
  CHECK_THROWS_AS(duursma_p(weight_distribution(LinearCode(m)), 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(duursma_p(WeightDistribution::parse("[1, 0, 5, 0]"), 3, 1), std::invalid_argument);
}

TEST_CASE("functional equation") {
  CHECK(functional_equation_check(RationalPoly::parse(kP7)).holds);
  CHECK(functional_equation_check(RationalPoly::parse(kP13)).holds);
  auto p7 = RationalPoly::parse(kP7);
  CHECK(p7.coefficient(8) == 16 * p7.coefficient(0));
  auto asym = functional_equation_check(RationalPoly::parse({"1/2", "1/2"}));
  CHECK_FALSE(asym.applicable);
  auto bad = functional_equation_check(RationalPoly::parse({"1/4", "1/4", "1/4"}));
  CHECK(bad.applicable);
  CHECK_FALSE(bad.holds);
}

TEST_CASE("zeros for p = 7") {
  auto r = zeta_report(qqr7(), 14, 7, 2, 1e-8);
  CHECK(r.zeros.size() == 8);
  CHECK(r.on_circle_count == 8);
  CHECK(r.rh_holds);
  CHECK(std::abs(r.d_from_zeros - std::complex<double>(4.0, 0.0)) < 1e-6);
  CHECK(r.d == 4);
  CHECK(r.d_dual == 4);
}

TEST_CASE("zeros for the extended p = 13 code") {
  auto r = zeta_report(ext13(), 26, 13, 2, 1e-6);
  CHECK(r.zeros.size() == 16);
  CHECK_FALSE(r.rh_holds);
  // 12 of the 16 zeros sit on |T| = 1/sqrt(2); see README
  CHECK(r.on_circle_count == 12);
  CHECK(std::abs(r.d_from_zeros - std::complex<double>(6.0, 0.0)) < 1e-4);
}

TEST_CASE("zeros pair up and satisfy Vieta for formally self-dual inputs") {
  for (auto [w, n, k] : {std::tuple{qqr7(), 14ul, 7ul}, std::tuple{ext13(), 26ul, 13ul}}) {
    REQUIRE(macwilliams(w, n, k) == w);
    const double tol = 1e-8;
    auto r = zeta_report(w, n, k, 2, tol);
    CHECK(r.functional_equation.holds);
    for (const auto& z : r.zeros) {
      const auto partner = 1.0 / (2.0 * z);
      double best = 1e9;
      for (const auto& y : r.zeros) best = std::min(best, std::abs(y - partner));
      CHECK(best < 10 * tol);
    }
    const auto& c = r.poly.coefficients();
    const auto lead = c.back().convert_to<double>();
    std::complex<double> sum = 0;
    std::complex<double> prod = 1;
    for (const auto& z : r.zeros) {
      sum += z;
      prod *= z;
    }
    CHECK(std::abs(sum + c[c.size() - 2].convert_to<double>() / lead) < 1e-8);
    const double sign = (r.zeros.size() % 2 == 0) ? 1.0 : -1.0;
    CHECK(std::abs(prod - sign * c[0].convert_to<double>() / lead) < 1e-8);
  }
}

TEST_CASE("d from zeros on other even-weight codes") {
  for (auto pv : {11ULL, 17ULL, 23ULL}) {
    auto c = build_qqr(Prime(pv));
    auto w = weight_distribution(c);
    auto r = zeta_report(w, c.length(), c.dimension());
    CHECK(std::abs(r.d_from_zeros - std::complex<double>(static_cast<double>(r.d), 0.0)) < 1e-4);
  }
}

TEST_CASE("zeros_and_rh rejects constants") {
  CHECK_THROWS_AS(zeros_and_rh(RationalPoly::parse({"1"}), 2, 1e-8), std::invalid_argument);
}
