#include "doctest.h"

#include "thue/dyadic.hpp"

#include <random>

using namespace thue;

namespace {

Dyadic random_dyadic(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> mant(-(1LL << 40), 1LL << 40);
  std::uniform_int_distribution<int> exp(0, 70);
  return Dyadic(BigInt(mant(rng)), static_cast<std::uint64_t>(exp(rng)));
}

}  // namespace

TEST_CASE("canonical form") {
  const Dyadic d(BigInt(12), 4);  // 12/16 = 3/4
  CHECK(d.mantissa() == 3);
  CHECK(d.exponent() == 2);
  CHECK(Dyadic(BigInt(0), 9).exponent() == 0);
  CHECK(Dyadic(BigInt(-8), 3) == Dyadic(-1));
  CHECK(Dyadic(BigInt(-8), 3).is_integer());
}

TEST_CASE("parsing and printing") {
  CHECK(Dyadic::parse("-1/8") == Dyadic(BigInt(-1), 3));
  CHECK(Dyadic::parse("3/2^5") == Dyadic(BigInt(3), 5));
  CHECK(Dyadic::parse("6/4") == Dyadic(BigInt(3), 1));
  CHECK(Dyadic::parse("-7") == Dyadic(-7));
  CHECK(Dyadic(BigInt(-11), 5).str() == "-11/32");
  CHECK(Dyadic(4).str() == "4");
  CHECK_THROWS_AS(Dyadic::parse("1/3"), DomainError);
  CHECK_THROWS_AS(Dyadic::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Dyadic::parse("1/-4"), DomainError);
  CHECK_THROWS_AS(Dyadic::parse("0.5"), DomainError);
  CHECK_THROWS_AS(Dyadic::parse("1/2^-1"), DomainError);
}

TEST_CASE("floor and scaled floor") {
  CHECK(Dyadic::parse("-1/2").floor() == -1);
  CHECK(Dyadic::parse("7/4").floor() == 1);
  CHECK(Dyadic::parse("7/4").floor_scaled(1) == 3);
  CHECK(Dyadic::parse("-7/4").floor_scaled(1) == -4);
  CHECK(Dyadic(3).floor_scaled(2) == 12);
}

TEST_CASE("arithmetic agrees with exact rationals") {
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 2000; ++i) {
    const Dyadic a = random_dyadic(rng);
    const Dyadic b = random_dyadic(rng);
    const Rational ra = a.to_rational();
    const Rational rb = b.to_rational();
    REQUIRE((a + b).to_rational() == ra + rb);
    REQUIRE((a - b).to_rational() == ra - rb);
    REQUIRE((a * b).to_rational() == ra * rb);
    REQUIRE((a < b) == (ra < rb));
    REQUIRE((a == b) == (ra == rb));
    REQUIRE(a.ldexp(-5).to_rational() == ra / 32);
    REQUIRE(a.ldexp(7).to_rational() == ra * 128);
    REQUIRE(a.floor() == floor(ra));
    REQUIRE(Dyadic::parse(a.str()) == a);
  }
}

TEST_CASE("numerator_at rejects coarser grids") {
  const Dyadic d = Dyadic::parse("3/8");
  CHECK(d.numerator_at(5) == 12);
  CHECK_THROWS_AS(d.numerator_at(2), DomainError);
}

TEST_CASE("to_double") {
  CHECK(Dyadic::parse("-11/32").to_double() == doctest::Approx(-0.34375));
  CHECK(Dyadic(BigInt(1) << 80, 80).to_double() == 1.0);
}
