#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qqr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when two independent computations of the same quantity disagree.
class CrossCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// "num/den" with the sign on the numerator; integers still carry "/1".
inline std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_fraction(const std::string& text);

}  // namespace qqr
