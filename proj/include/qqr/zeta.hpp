#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qqr/gf2linalg.hpp"
#include "qqr/numeric.hpp"

namespace qqr {

/// Exact polynomial, lowest degree first. Trailing zeros are trimmed.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly parse(const std::vector<std::string>& fractions);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational operator()(const Rational& t) const;

  /// "2/143 + 4/143*T + ...".
  std::string to_string() const;

  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Duursma's P(T) for an [n, k]_q code with distribution w. The minimum
/// distances d and d_dual are read from w and its MacWilliams transform.
RationalPoly duursma_p(const WeightDistribution& w, std::size_t n, std::size_t k, unsigned q = 2);

/// Coefficient of T^{n-d} in P(T)/((1-T)(1-qT)) (xT + y(1-T))^n, returned as
/// the coefficients of x^{n-i} y^i for i = 0..n. Used to verify duursma_p.
std::vector<Rational> duursma_enumerator(const RationalPoly& poly, std::size_t n, std::size_t d, unsigned q = 2);

struct FunctionalEquation {
  bool applicable;  // degree is even
  bool holds;       // p_{2g-i} = q^{g-i} p_i for all i
};

FunctionalEquation functional_equation_check(const RationalPoly& poly, unsigned q = 2);

struct ZetaReport {
  RationalPoly poly;
  unsigned q = 2;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t d_dual = 0;
  std::vector<std::complex<double>> zeros;
  double tol = 1e-8;
  std::size_t on_circle_count = 0;
  bool rh_holds = false;
  FunctionalEquation functional_equation{false, false};
  std::complex<double> d_from_zeros;  // 2 - sum 1/rho
  double max_residual = 0.0;
};

/// Zeros of poly (companion-matrix eigenvalues polished by Newton steps) and
/// the circle test | |rho| - q^{-1/2} | < tol.
ZetaReport zeros_and_rh(const RationalPoly& poly, unsigned q, double tol);

/// duursma_p followed by zeros_and_rh, with n, k, d, d_dual filled in.
ZetaReport zeta_report(const WeightDistribution& w, std::size_t n, std::size_t k, unsigned q = 2, double tol = 1e-8);

}  // namespace qqr
