#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace thue {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Malformed numeric text or a value outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured memory or length budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Floor division for a positive divisor; rounds toward -inf, not toward 0.
BigInt floor_div(const BigInt& num, const BigInt& den);

BigInt floor(const Rational& r);

// Accepts "p" or "p/q" with q != 0. Result is in lowest terms.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

BigInt parse_integer(std::string_view text);

}  // namespace thue
