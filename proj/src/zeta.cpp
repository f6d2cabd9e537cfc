#include "qqr/zeta.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qqr {

Rational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("'" + text + "' is not a fraction of the form num/den");
  }
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::parse(const std::vector<std::string>& fractions) {
  std::vector<Rational> c;
  c.reserve(fractions.size());
  for (const auto& f : fractions) c.push_back(parse_fraction(f));
  return RationalPoly(std::move(c));
}

Rational RationalPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string RationalPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_fraction_string(coeffs_[i]);
    if (i == 1) out += "*T";
    if (i > 1) out += "*T^" + std::to_string(i);
  }
  return out;
}

namespace {

BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  BigInt b = 1;
  for (std::size_t i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
  return b;
}

// Coefficient of x^{n-i} y^i contributed by z_j: the T^{n-d} coefficient of
// z_j T^j (y + (x - y) T)^n is z_j C(n, m-j) (x - y)^{m-j} y^{d+j}, m = n - d.
Rational basis_entry(std::size_t n, std::size_t d, std::size_t j, std::size_t i) {
  const std::size_t m = n - d;
  const std::size_t e = m - j;  // power of (x - y)
  if (n - i > e || i < d) return 0;
  BigInt v = binomial(n, e) * binomial(e, n - i);
  if ((e - (n - i)) % 2 != 0) v = -v;
  return Rational(v);
}

// Exact Gaussian elimination; throws when the matrix is singular.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("duursma_p: singular system (inconsistent weight distribution)");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace

RationalPoly duursma_p(const WeightDistribution& w, std::size_t n, std::size_t k, unsigned q) {
  if (q < 2) throw std::invalid_argument("duursma_p: q must be at least 2");
  const WeightDistribution wd = macwilliams(w, n, k, q);
  const auto d_opt = w.min_nonzero_weight();
  const auto dd_opt = wd.min_nonzero_weight();
  if (!d_opt || !dd_opt) throw std::invalid_argument("duursma_p: code or its dual is trivial");
  const std::size_t d = *d_opt;
  const std::size_t dd = *dd_opt;
  if (d < 2 || dd < 2) {
    throw std::invalid_argument("duursma_p: requires d >= 2 and d_dual >= 2 (got d = " + std::to_string(d) +
                                ", d_dual = " + std::to_string(dd) + ")");
  }

  const std::size_t m = n - d;
  std::vector<std::vector<Rational>> a(m + 1, std::vector<Rational>(m + 1));
  std::vector<Rational> rhs(m + 1);
  for (std::size_t r = 0; r <= m; ++r) {
    const std::size_t i = d + r;
    for (std::size_t j = 0; j <= m; ++j) a[r][j] = basis_entry(n, d, j, i);
    rhs[r] = Rational(w[i]) / (q - 1);
  }
  const auto z = solve_exact(std::move(a), std::move(rhs));

  // P(T) = (1 - T)(1 - qT) Z(T), truncated at T^m.
  std::vector<Rational> coeffs(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    coeffs[i] = z[i];
    if (i >= 1) coeffs[i] -= Rational(q + 1) * z[i - 1];
    if (i >= 2) coeffs[i] += Rational(q) * z[i - 2];
  }
  const std::size_t degree = n + 2 - d - dd;
  for (std::size_t i = degree + 1; i <= m; ++i) {
    if (coeffs[i] != 0) {
      throw CrossCheckError("duursma_p: coefficient of T^" + std::to_string(i) + " is nonzero beyond degree " +
                            std::to_string(degree));
    }
  }
  RationalPoly poly(std::move(coeffs));
  if (poly(Rational(1)) != 1) throw CrossCheckError("duursma_p: P(1) = " + to_fraction_string(poly(Rational(1))));
  return poly;
}

std::vector<Rational> duursma_enumerator(const RationalPoly& poly, std::size_t n, std::size_t d, unsigned q) {
  const std::size_t m = n - d;
  std::vector<Rational> z(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    z[j] = poly.coefficient(j);
    if (j >= 1) z[j] += Rational(q + 1) * z[j - 1];
    if (j >= 2) z[j] -= Rational(q) * z[j - 2];
  }
  std::vector<Rational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) out[i] += z[j] * basis_entry(n, d, j, i);
  }
  return out;
}

FunctionalEquation functional_equation_check(const RationalPoly& poly, unsigned q) {
  const int deg = poly.degree();
  if (deg < 0 || deg % 2 != 0) return {false, false};
  const int g = deg / 2;
  for (int i = 0; i <= deg; ++i) {
    const int e = g - i;
    Rational scale = 1;
    for (int t = 0; t < std::abs(e); ++t) scale *= q;
    if (e < 0) scale = 1 / scale;
    if (poly.coefficient(static_cast<std::size_t>(deg - i)) != scale * poly.coefficient(static_cast<std::size_t>(i))) {
      return {true, false};
    }
  }
  return {true, true};
}

namespace {

using Cld = std::complex<long double>;

struct Eval {
  Cld value;
  Cld deriv;
  long double scale;  // sum |c_i| |x|^i, for a relative residual
};

Eval horner(const std::vector<long double>& c, Cld x) {
  Cld v = 0;
  Cld dv = 0;
  long double s = 0;
  const long double ax = std::abs(x);
  for (std::size_t i = c.size(); i-- > 0;) {
    dv = dv * x + v;
    v = v * x + c[i];
    s = s * ax + std::fabs(c[i]);
  }
  return {v, dv, s};
}

}  // namespace

ZetaReport zeros_and_rh(const RationalPoly& poly, unsigned q, double tol) {
  const int deg = poly.degree();
  if (deg < 1) throw std::invalid_argument("zeros_and_rh: polynomial must have degree at least 1");

  ZetaReport r;
  r.poly = poly;
  r.q = q;
  r.tol = tol;
  r.functional_equation = functional_equation_check(poly, q);

  std::vector<long double> c;
  for (const auto& x : poly.coefficients()) {
    c.push_back(static_cast<long double>(numerator(x).convert_to<long double>() /
                                         denominator(x).convert_to<long double>()));
  }

  const auto n = static_cast<Eigen::Index>(deg);
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    companion(i, n - 1) = static_cast<double>(-c[static_cast<std::size_t>(i)] / c.back());
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("zeros_and_rh: eigenvalue iteration did not converge");

  const double circle = 1.0 / std::sqrt(static_cast<double>(q));
  std::complex<double> inv_sum = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    Cld x(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    Eval e = horner(c, x);
    for (int it = 0; it < 20 && std::abs(e.deriv) > 0; ++it) {
      const Cld next = x - e.value / e.deriv;
      const Eval en = horner(c, next);
      if (!(std::abs(en.value) < std::abs(e.value))) break;
      x = next;
      e = en;
    }
    const double residual = static_cast<double>(std::abs(e.value) / (e.scale > 0 ? e.scale : 1.0L));
    r.max_residual = std::max(r.max_residual, residual);
    const std::complex<double> z(static_cast<double>(x.real()), static_cast<double>(x.imag()));
    r.zeros.push_back(z);
    inv_sum += 1.0 / z;
    if (std::abs(std::abs(z) - circle) < tol) ++r.on_circle_count;
  }
  if (r.max_residual > 1e-9) {
    throw std::runtime_error("zeros_and_rh: root polishing did not converge (relative residual " +
                             std::to_string(r.max_residual) + ")");
  }
  r.rh_holds = r.on_circle_count == r.zeros.size();
  r.d_from_zeros = 2.0 - inv_sum;
  return r;
}

ZetaReport zeta_report(const WeightDistribution& w, std::size_t n, std::size_t k, unsigned q, double tol) {
  const RationalPoly poly = duursma_p(w, n, k, q);
  ZetaReport r = zeros_and_rh(poly, q, tol);
  r.n = n;
  r.k = k;
  r.d = *w.min_nonzero_weight();
  r.d_dual = *macwilliams(w, n, k, q).min_nonzero_weight();
  return r;
}

}  // namespace qqr
