#include "doctest.h"

#include "thue/seqcore.hpp"

#include <cstdint>

using namespace thue;

namespace {

// {0,1} Thue-Morse by the doubling rule t(2n) = t(n), t(2n+1) = 1 - t(n).
std::vector<int> doubling_oracle(std::size_t length) {
  std::vector<int> t(length);
  for (std::size_t i = 1; i < length; ++i) t[i] = (i % 2 == 0) ? t[i / 2] : 1 - t[i / 2];
  return t;
}

}  // namespace

TEST_CASE("thue_morse matches the listed prefix") {
  const int expected[] = {-1, 1, 1, -1, 1, -1, -1, 1};
  for (std::uint64_t i = 0; i < 8; ++i) CHECK(thue_morse(i).value() == expected[i]);
  CHECK(thue_morse(0) == Sign::minus());
  CHECK(thue_morse(7) == Sign::plus());
}

TEST_CASE("thue_morse satisfies u(2n) = u(n) and u(2n+1) = -u(n)") {
  for (std::uint64_t n = 0; n < (1u << 16); ++n) {
    REQUIRE(thue_morse(2 * n) == thue_morse(n));
    REQUIRE(thue_morse(2 * n + 1) == -thue_morse(n));
  }
}

TEST_CASE("thue_morse_prefix agrees with bit parity and the doubling oracle") {
  CHECK(thue_morse_prefix(1) == std::vector<Sign>{Sign::minus()});
  const auto eight = thue_morse_prefix(8);
  const int expected[] = {-1, 1, 1, -1, 1, -1, -1, 1};
  for (std::size_t i = 0; i < 8; ++i) CHECK(eight[i].value() == expected[i]);

  const std::size_t length = std::size_t{1} << 16;
  const auto word = thue_morse_prefix(length);
  const auto oracle = doubling_oracle(length);
  REQUIRE(word.size() == length);
  for (std::size_t i = 0; i < length; ++i) {
    REQUIRE(word[i] == thue_morse(i));
    REQUIRE(word[i].value() == (oracle[i] ? 1 : -1));
  }
  CHECK(thue_morse_prefix(5).size() == 5);
  CHECK_THROWS_AS(thue_morse_prefix(0), DomainError);
}

TEST_CASE("partial sums of u stay in [-1, 1] and vanish at even length") {
  long long sum = 0;
  for (std::uint64_t k = 0; k < (1u << 16); ++k) {
    sum += thue_morse(k).value();
    REQUIRE(sum >= -1);
    REQUIRE(sum <= 1);
    if (k % 2 == 1) REQUIRE(sum == 0);
  }
}

TEST_CASE("Sign rejects zero") {
  CHECK_THROWS_AS(Sign::from_int(0), DomainError);
  CHECK(Sign::from_int(-1) == Sign::minus());
}

TEST_CASE("floor division rounds toward minus infinity") {
  CHECK(floor_div(BigInt(7), BigInt(2)) == 3);
  CHECK(floor_div(BigInt(-7), BigInt(2)) == -4);
  CHECK(floor_div(BigInt(-6), BigInt(3)) == -2);
  CHECK(floor(parse_rational("-1/3")) == -1);
  CHECK(floor(parse_rational("4/3")) == 1);
  CHECK_THROWS_AS(floor_div(BigInt(1), BigInt(0)), DomainError);
}

TEST_CASE("sturmian_v and sturmian_w at alpha = 2/3") {
  const Rational alpha = parse_rational("2/3");
  CHECK(sturmian_v(alpha, 0) == 0);
  CHECK(sturmian_v(alpha, 1) == 1);
  CHECK(sturmian_w(alpha, 0) == alpha);
  CHECK(sturmian_w(alpha, 1) == parse_rational("-1/3"));
}

TEST_CASE("degenerate alphas") {
  for (std::uint64_t n = 0; n < 50; ++n) {
    CHECK(sturmian_v(Rational(0), n) == 0);
    CHECK(sturmian_v(Rational(1), n) == 1);
    CHECK(sturmian_w(Rational(1), n) == 0);
  }
}

TEST_CASE("alpha outside [0, 1] is rejected") {
  CHECK_THROWS_AS(sturmian_v(parse_rational("3/2"), 0), DomainError);
  CHECK_THROWS_AS(sturmian_w(parse_rational("-1/5"), 3), DomainError);
}

TEST_CASE("partial sums of w(alpha) equal the fractional part of k alpha") {
  // oracle: {k p/q} = (k p mod q) / q with native integers
  const std::pair<long long, long long> alphas[] = {
      {2, 3}, {1, 2}, {3, 7}, {13, 21}, {0, 1}, {1, 1}, {832040, 1346269}};
  for (const auto& [p, q] : alphas) {
    const Rational alpha(p, q);
    Rational sum = 0;
    for (long long k = 1; k <= 500; ++k) {
      sum += sturmian_w(alpha, static_cast<std::uint64_t>(k - 1));
      REQUIRE(sum == Rational((k * p) % q, q));
    }
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("5")) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x/2"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
}
