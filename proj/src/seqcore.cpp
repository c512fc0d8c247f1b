#include "thue/seqcore.hpp"

#include <bit>

namespace thue {

Sign Sign::from_int(int v) {
  if (v != 1 && v != -1) throw DomainError("Sign must be -1 or +1");
  return Sign(v);
}

Sign thue_morse(std::uint64_t n) {
  return (std::popcount(n) & 1) ? Sign::plus() : Sign::minus();
}

std::vector<Sign> thue_morse_prefix(std::size_t length) {
  if (length == 0) throw DomainError("thue_morse_prefix: length must be positive");
  std::vector<Sign> word{Sign::minus()};
  while (word.size() < length) {
    std::vector<Sign> next;
    next.reserve(2 * word.size());
    for (Sign s : word) {
      next.push_back(s);
      next.push_back(-s);
    }
    word = std::move(next);
  }
  word.erase(word.begin() + static_cast<std::ptrdiff_t>(length), word.end());
  return word;
}

namespace {

void require_unit_interval(const Rational& alpha) {
  if (alpha < 0 || alpha > 1) {
    throw DomainError("alpha must lie in [0, 1], got " + to_string(alpha));
  }
}

}  // namespace

int sturmian_v(const Rational& alpha, std::uint64_t n) {
  require_unit_interval(alpha);
  const BigInt hi = floor(alpha * Rational(BigInt(n) + 1));
  const BigInt lo = floor(alpha * Rational(BigInt(n)));
  return static_cast<int>(hi - lo);
}

Rational sturmian_w(const Rational& alpha, std::uint64_t n) {
  return sturmian_v(alpha, n) == 0 ? alpha : Rational(-(1 - alpha));
}

}  // namespace thue
