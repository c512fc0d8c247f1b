#pragma once

#include "thue/numeric.hpp"

#include <cstdint>
#include <vector>

namespace thue {

// One letter of the {-1, +1} alphabet.
class Sign {
 public:
  static constexpr Sign minus() { return Sign(-1); }
  static constexpr Sign plus() { return Sign(1); }
  // Throws DomainError unless v is -1 or +1.
  static Sign from_int(int v);

  constexpr int value() const { return value_; }
  constexpr Sign operator-() const { return Sign(-value_); }
  friend constexpr bool operator==(Sign, Sign) = default;

 private:
  constexpr explicit Sign(int v) : value_(v) {}
  int value_;
};

// u_n of the fixed point of -1 -> (-1)1, 1 -> 1(-1) seeded at -1:
// +1 iff the binary digit sum of n is odd.
Sign thue_morse(std::uint64_t n);

// First `length` letters obtained by iterating the substitution on the seed -1.
// Independent of thue_morse(); the two constructions cross-check each other.
std::vector<Sign> thue_morse_prefix(std::size_t length);

// v_n(alpha) = floor((n+1) alpha) - floor(n alpha), alpha in [0, 1].
int sturmian_v(const Rational& alpha, std::uint64_t n);

// alpha when v_n(alpha) = 0, -(1 - alpha) otherwise.
Rational sturmian_w(const Rational& alpha, std::uint64_t n);

}  // namespace thue
