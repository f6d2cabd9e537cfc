#include "report.hpp"

#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace qqrtool {

namespace {

std::string iso8601(std::chrono::system_clock::time_point t) {
  const std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

json big_to_json(const qqr::BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::report: return "report";
    case Status::skip: return "skip";
  }
  return "?";
}

RunReport::RunReport(std::string command, std::vector<std::string> argv, std::uint64_t seed)
    : command_(std::move(command)), argv_(std::move(argv)), seed_(seed), started_(std::chrono::system_clock::now()) {}

void RunReport::check(const std::string& name, bool ok, const std::string& detail) {
  checks_.push_back({{"name", name}, {"status", to_string(ok ? Status::pass : Status::fail)}, {"detail", detail}});
  if (!ok) failed_ = true;
}

void RunReport::verdict(const std::string& name, std::optional<bool> holds, const std::string& detail) {
  json v = holds ? json(*holds) : json(nullptr);
  checks_.push_back({{"name", name}, {"status", to_string(Status::report)}, {"holds", v}, {"detail", detail}});
}

void RunReport::skip(const std::string& name, const std::string& why) {
  checks_.push_back({{"name", name}, {"status", to_string(Status::skip)}, {"detail", why}});
}

json RunReport::to_json() const {
  json j;
  j["tool"] = "qqrtool";
  j["version"] = kVersion;
  j["command"] = command_;
  j["argv"] = argv_;
  j["p"] = p_ ? json(*p_) : json(nullptr);
  j["seed"] = seed_;
  j["started"] = iso8601(started_);
  j["finished"] = iso8601(std::chrono::system_clock::now());
  j["results"] = results_;
  j["checks"] = checks_;
  j["ok"] = !failed_;
  return j;
}

void RunReport::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << to_json().dump(2) << '\n';
}

json to_json(const qqr::WeightDistribution& w) {
  json a = json::array();
  for (const auto& c : w.counts()) a.push_back(big_to_json(c));
  return a;
}

json to_json(const qqr::RationalPoly& poly) {
  json a = json::array();
  for (const auto& c : poly.coefficients()) a.push_back(qqr::to_fraction_string(c));
  return a;
}

json to_json(const qqr::Subset& s) { return s.elements(); }

json to_json(const qqr::ZetaReport& z) {
  json zeros = json::array();
  for (const auto& r : z.zeros) zeros.push_back({r.real(), r.imag()});
  return {
      {"n", z.n},
      {"k", z.k},
      {"d", z.d},
      {"d_dual", z.d_dual},
      {"q", z.q},
      {"degree", z.poly.degree()},
      {"coefficients", to_json(z.poly)},
      {"P(1)", qqr::to_fraction_string(z.poly(qqr::Rational(1)))},
      {"functional_equation", z.functional_equation.applicable ? json(z.functional_equation.holds) : json(nullptr)},
      {"zeros", zeros},
      {"tol", z.tol},
      {"on_circle_count", z.on_circle_count},
      {"rh_holds", z.rh_holds},
      {"d_from_zeros", {z.d_from_zeros.real(), z.d_from_zeros.imag()}},
      {"max_residual", z.max_residual},
  };
}

json to_json(const qqr::SearchResult& r) {
  const double p = static_cast<double>(r.p.value());
  return {
      {"p", r.p.value()},
      {"strategy", qqr::to_string(r.strategy)},
      {"seed", r.seed},
      {"samples", r.samples},
      {"best_subset", to_json(r.best)},
      {"best_total", r.best_total},
      {"ratio", static_cast<double>(r.best_total) / p},
  };
}

void print_checks(std::ostream& out, const json& checks) {
  for (const auto& c : checks) {
    std::string tag = c["status"].get<std::string>();
    if (tag == "report") {
      tag = c["holds"].is_null() ? "n/a" : (c["holds"].get<bool>() ? "true" : "false");
    }
    out << "  " << std::left << std::setw(8) << tag << std::setw(52) << c["name"].get<std::string>();
    if (!c["detail"].get<std::string>().empty()) out << ' ' << c["detail"].get<std::string>();
    out << '\n';
  }
}

void print_distribution(std::ostream& out, const qqr::WeightDistribution& w, bool csv) {
  if (csv) out << w.to_csv();
  else out << w.to_bracket_string() << '\n';
}

void print_zeta(std::ostream& out, const qqr::ZetaReport& z) {
  out << "P(T) = " << z.poly.to_string() << '\n';
  out << "degree " << z.poly.degree() << ", P(1) = " << qqr::to_fraction_string(z.poly(qqr::Rational(1)))
      << ", functional equation: "
      << (z.functional_equation.applicable ? (z.functional_equation.holds ? "holds" : "fails") : "n/a") << '\n';
  const double circle = 1.0 / std::sqrt(static_cast<double>(z.q));
  out << "zeros (|rho| - q^(-1/2)):\n";
  const auto flags = out.flags();
  for (const auto& r : z.zeros) {
    out << "  " << std::showpos << std::fixed << std::setprecision(12) << r.real() << ' ' << r.imag() << "i  "
        << std::scientific << std::setprecision(2) << std::abs(r) - circle << '\n';
    out.flags(flags);
  }
  out << std::noshowpos << "on circle (tol " << z.tol << "): " << z.on_circle_count << " of " << z.zeros.size()
      << ", RH " << (z.rh_holds ? "holds" : "fails") << '\n';
  out << "2 - sum 1/rho = " << std::setprecision(10) << z.d_from_zeros.real() << " (d = " << z.d << ")\n";
  out.flags(flags);
}

}  // namespace qqrtool
