#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace symharm {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Always stored in lowest terms with positive
// denominator; equality and all arithmetic are exact. No floating point
// is used anywhere in the library.
using Scalar = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed structure strings, out-of-range coordinates.
struct ParseError : Error {
  using Error::Error;
};

// A precondition on values was violated (degenerate form, odd dimension,
// mismatched spaces).
struct ValueError : Error {
  using Error::Error;
};

inline int sign_of(const Scalar& x) {
  return x.sign();
}

inline BigInt numerator_of(const Scalar& x) {
  return boost::multiprecision::numerator(x);
}

inline BigInt denominator_of(const Scalar& x) {
  return boost::multiprecision::denominator(x);
}

// Renders "p" or "p/q", q > 0.
inline std::string to_string(const Scalar& x) {
  return x.str();
}

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Scalar parse_scalar(std::string_view text);

}  // namespace symharm
