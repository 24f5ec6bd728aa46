#pragma once

// Exact arbitrary-precision rational scalars and the error types shared by
// every component.  Rational values are always kept in lowest terms with a
// positive denominator; that canonical form is maintained by the backing
// boost type, so equality is plain value equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cliffpair {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a mathematical precondition.
struct domain_error : error {
  using error::error;
};

// Malformed textual or JSON input.
struct parse_error : error {
  using error::error;
};

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline std::string to_string(const Integer& n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

// Accepts "p", "-p", "p/q" with q > 0 after sign normalization; rejects q = 0.
inline Rational parse_rational(const std::string& text) {
  auto is_digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!is_digits(num) || !is_digits(den))
    throw parse_error("bad rational literal: " + text);
  Integer n(num), d(den);
  if (d == 0) throw parse_error("zero denominator: " + text);
  if (neg) n = -n;
  return Rational(n, d);
}

inline Integer integer_value(const Rational& r) {
  if (denominator(r) != 1) throw domain_error("not an integer: " + to_string(r));
  return numerator(r);
}

}  // namespace cliffpair
