#pragma once

#include "thue/numeric.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace thue {

// Exact dyadic rational mantissa / 2^exponent, kept canonical: the mantissa is
// odd, or zero with exponent 0. Equality is therefore structural.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long v) : mantissa_(v) {}  // NOLINT: implicit from integers
  Dyadic(BigInt mantissa, std::uint64_t exponent = 0);

  const BigInt& mantissa() const { return mantissa_; }
  std::uint64_t exponent() const { return exponent_; }

  bool is_zero() const { return mantissa_ == 0; }
  bool is_integer() const { return exponent_ == 0; }
  int sign() const { return mantissa_.sign(); }

  // Value times 2^shift (shift may be negative).
  Dyadic ldexp(std::int64_t shift) const;

  // floor(value) and floor(value * 2^shift) for shift >= 0.
  BigInt floor() const;
  BigInt floor_scaled(std::uint64_t shift) const;

  // Numerator of value * 2^e for e >= exponent(); throws DomainError otherwise.
  BigInt numerator_at(std::uint64_t e) const;

  Rational to_rational() const;
  double to_double() const;

  // "p" for integers, otherwise "p/q" with q = 2^e written in decimal.
  std::string str() const;

  // Accepts "p", "p/q" with q a power of two, or "p/2^e".
  static Dyadic parse(std::string_view text);

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& o);
  Dyadic& operator-=(const Dyadic& o);
  Dyadic& operator*=(const Dyadic& o);

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void canonicalize();

  BigInt mantissa_{0};
  std::uint64_t exponent_ = 0;
};

Dyadic abs(const Dyadic& d);
Dyadic min(const Dyadic& a, const Dyadic& b);
Dyadic max(const Dyadic& a, const Dyadic& b);

}  // namespace thue
