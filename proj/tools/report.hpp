#pragma once

#include <chrono>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qqr/bounds.hpp"
#include "qqr/field.hpp"
#include "qqr/gf2linalg.hpp"
#include "qqr/zeta.hpp"

namespace qqrtool {

inline constexpr const char* kVersion = "1.0.0";

using nlohmann::json;

enum class Status { pass, fail, report, skip };
std::string to_string(Status s);

/// Accumulates the machine-readable record of one invocation.
class RunReport {
 public:
  RunReport(std::string command, std::vector<std::string> argv, std::uint64_t seed);

  void set_p(std::uint64_t p) { p_ = p; }
  json& results() { return results_; }

  /// A pass/fail line; `fail` makes the process exit nonzero.
  void check(const std::string& name, bool ok, const std::string& detail = "");
  /// A verdict that is reported but never affects the exit code.
  void verdict(const std::string& name, std::optional<bool> holds, const std::string& detail = "");
  void skip(const std::string& name, const std::string& why);

  bool any_failed() const noexcept { return failed_; }
  const json& checks() const noexcept { return checks_; }

  json to_json() const;
  void write(const std::string& path) const;

 private:
  std::string command_;
  std::vector<std::string> argv_;
  std::uint64_t seed_;
  std::optional<std::uint64_t> p_;
  std::chrono::system_clock::time_point started_;
  json results_ = json::object();
  json checks_ = json::array();
  bool failed_ = false;
};

json to_json(const qqr::WeightDistribution& w);
json to_json(const qqr::RationalPoly& poly);
json to_json(const qqr::Subset& s);
json to_json(const qqr::ZetaReport& z);
json to_json(const qqr::SearchResult& r);

/// Text table of pass/fail/report lines.
void print_checks(std::ostream& out, const json& checks);

/// Distribution in bracket form, or CSV when `csv` is set.
void print_distribution(std::ostream& out, const qqr::WeightDistribution& w, bool csv);

void print_zeta(std::ostream& out, const qqr::ZetaReport& z);

}  // namespace qqrtool
