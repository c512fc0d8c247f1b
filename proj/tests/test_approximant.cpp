#include "doctest.h"

#include "thue/approximant.hpp"
#include "thue/seqcore.hpp"

using namespace thue;

namespace {

Dyadic d(const char* text) { return Dyadic::parse(text); }

// Depth-n column from running sums of the sequence, in native integers (n <= 12).
std::vector<long long> column_oracle(int n, std::uint64_t nodes) {
  std::vector<long long> col(nodes + 1);
  for (std::uint64_t k = 0; k <= nodes; ++k) col[k] = thue_morse(k).value();
  for (int level = 1; level <= n; ++level) {
    long long running = 0;
    for (auto& v : col) {
      const long long prev = v;
      v = running;
      running += prev;
    }
  }
  return col;
}

}  // namespace

TEST_CASE("node values") {
  CHECK(node_value(4, 8) == d("-1"));
  CHECK(node_value(4, 4) == d("-1/8"));
  CHECK(node_value(5, 16) == d("-1"));
  CHECK(node_value(3, 4) == Dyadic(-1));
  CHECK(node_exponent(1) == 0);
  CHECK(node_exponent(2) == 0);
  CHECK(node_exponent(12) == 55);
}

TEST_CASE("eval_fn examples") {
  CHECK(eval_fn(4, d("1/2")) == d("-1/8"));
  CHECK(eval_fn(4, d("-3")) == Dyadic(0));
  CHECK(eval_fn(4, Dyadic(0)) == Dyadic(0));
  CHECK(eval_fn(4, Dyadic(1)) == Dyadic(-1));
  CHECK(eval_fn(5, d("1/2")) == d("-1/4"));
  CHECK(eval_fn(6, d("1/2")) == d("-11/32"));
  // between nodes: midpoint of x^0_4 = 0 and x^1_4 = 0 is 0; between 1/2 and 5/8 linear
  CHECK(eval_fn(4, d("9/16")) == (d("-1/8") + node_value(4, 5)) * d("1/2"));
}

TEST_CASE("out-of-range evaluation") {
  const auto f = Approximant::from_triangle(4, 16);
  CHECK(f.max_abscissa() == Dyadic(2));
  CHECK_NOTHROW(f(Dyadic(2)));
  CHECK_THROWS_AS(f(d("2049/1024")), OutOfRangeError);
  CHECK(f(Dyadic(-100)) == Dyadic(0));
}

TEST_CASE("node values agree with an integer running-sum oracle") {
  for (int n = 1; n <= 12; ++n) {
    const std::uint64_t nodes = std::uint64_t{1} << (n + 3);
    const auto oracle = column_oracle(n, nodes);
    const auto f = Approximant::from_triangle(n, nodes);
    const Dyadic scale(BigInt(1), node_exponent(n));
    for (std::uint64_t k = 0; k <= nodes; ++k) {
      REQUIRE(f.node_value(k) == Dyadic(oracle[k]) * scale);
      REQUIRE(f(f.abscissa(k)) == f.node_value(k));
    }
  }
}

TEST_CASE("factorized and direct columns coincide") {
  for (int n = 1; n <= 12; ++n) {
    const std::uint64_t nodes = (std::uint64_t{1} << n) * 5 + 3;
    const auto direct = Approximant::from_triangle(n, nodes);
    const auto factored =
        Approximant::from_coefficients(coefficient_row(n, CoefficientMethod::from_recurrence), nodes);
    REQUIRE(std::equal(direct.column().begin(), direct.column().end(),
                       factored.column().begin(), factored.column().end()));
  }
}

TEST_CASE("consecutive nodes differ by the previous level scaled by 2^{-(n-2)}") {
  for (int n = 2; n <= 12; ++n) {
    const std::uint64_t nodes = std::uint64_t{1} << (n + 2);
    const auto f = Approximant::from_triangle(n, nodes);
    const auto g = Approximant::from_triangle(n - 1, nodes);
    const Dyadic scale = Dyadic(1).ldexp(-(n - 2));
    for (std::uint64_t k = 0; k < nodes; ++k) {
      REQUIRE(f.node_value(k) - f.node_value(k + 1) == -g.node_value(k) * scale);
    }
  }
}

TEST_CASE("slopes are 2 f_{n-1}(2x); the steepest slope is exactly 2") {
  for (int n = 2; n <= 11; ++n) {
    const std::uint64_t nodes = std::uint64_t{1} << (n + 3);  // [0, 16]
    const auto f = Approximant::from_triangle(n, nodes);
    Dyadic steepest(0);
    for (std::uint64_t k = 0; k < nodes; ++k) {
      const Dyadic slope = (f.node_value(k + 1) - f.node_value(k)) * Dyadic(1).ldexp(n - 1);
      REQUIRE(slope == Dyadic(2) * eval_fn(n - 1, Dyadic(2) * f.abscissa(k)));
      steepest = max(steepest, abs(slope));
    }
    CHECK(steepest == Dyadic(2));
  }
}

TEST_CASE("f_n(x) is monotone in n on each half period") {
  // decreasing on [2m, 2m+1] when u_m = -1, increasing on [2m+1, 2m+2]; reversed for u_m = +1
  std::vector<Approximant> fs;
  for (int n = 2; n <= 11; ++n) fs.push_back(Approximant::from_triangle(n, std::uint64_t{16} << (n - 1)));
  for (std::uint64_t j = 0; j <= 16 * 256; ++j) {
    const Dyadic x = Dyadic(BigInt(j), 8);
    const BigInt m = x.floor_scaled(0) >> 1;
    const bool first_half = x.floor() == 2 * m;
    const bool decreasing = first_half == (thue_morse(static_cast<std::uint64_t>(m)) == Sign::minus());
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
      const Dyadic a = fs[i](x);
      const Dyadic b = fs[i + 1](x);
      if (decreasing) {
        REQUIRE(b <= a);
      } else {
        REQUIRE(b >= a);
      }
    }
  }
}

TEST_CASE("f_n(1/2) decreases towards -1/2") {
  Dyadic prev(0);
  for (int n = 2; n <= 22; ++n) {
    const Dyadic v = eval_fn(n, d("1/2"));
    CHECK(v <= prev);
    CHECK(v > d("-1/2"));
    prev = v;
  }
  CHECK(prev.to_double() < -0.49998);
}

TEST_CASE("eval_finfty") {
  SUBCASE("integer points are exact") {
    const auto e1 = eval_finfty(Dyadic(1), d("1/1024"));
    CHECK(e1.lower == Dyadic(-1));
    CHECK(e1.upper == Dyadic(-1));
    CHECK(e1.status == EnclosureStatus::converged);
    const auto e6 = eval_finfty(Dyadic(6), d("1/1024"));
    CHECK(e6.lower == Dyadic(0));
    CHECK(e6.upper == Dyadic(0));
    CHECK(eval_finfty(Dyadic(3), d("1/8")).lower == Dyadic(1));
    CHECK(eval_finfty(Dyadic(7), d("1/8")).upper == Dyadic(-1));
    CHECK(eval_finfty(d("-5/2"), d("1/8")).upper == Dyadic(0));
  }
  SUBCASE("x = 1/2") {
    const auto e = eval_finfty(d("1/2"), d("1/1024"));
    CHECK(e.lower == Dyadic(-1));
    CHECK(e.upper <= d("-11/32"));
    CHECK(e.upper == eval_fn(20, d("1/2")));
    CHECK(e.status == EnclosureStatus::level_cap_reached);
    CHECK(e.level_reached == 20);
  }
  SUBCASE("later levels stay inside the enclosure") {
    for (const char* text : {"1/2", "3/4", "3/2", "5/2", "7/4", "13/8", "21/4", "3/16"}) {
      const Dyadic x = d(text);
      const auto e = eval_finfty(x, d("1/1048576"), 14);
      for (int n = 15; n <= 18; ++n) {
        const Dyadic v = eval_fn(n, x);
        CHECK(e.lower <= v);
        CHECK(v <= e.upper);
      }
    }
  }
  SUBCASE("status tracks the tolerance") {
    const auto coarse = eval_finfty(d("1/2"), Dyadic(2));
    CHECK(coarse.status == EnclosureStatus::converged);
    CHECK(coarse.width() <= Dyadic(2));
    CHECK_THROWS_AS(eval_finfty(d("1/2"), Dyadic(0)), DomainError);
  }
}

TEST_CASE("operator T") {
  SequenceState s{{Rational(1), Rational(2), Rational(4)}, 0};
  const auto t = operator_T(s);
  CHECK(t.coords[0] == 1);
  CHECK(t.coords[1] == 3);
  CHECK(t.coords[2] == 5);
  CHECK(operator_T(zero_state(5)) == zero_state(5));
  CHECK_THROWS_AS(zero_state(0), DomainError);
}

TEST_CASE("iterate_T reproduces the negated normalized triangle") {
  const auto orbit = iterate_T(3, 3);
  CHECK(orbit[1].coords[0] == 1);
  CHECK(orbit[1].coords[1] == 0);
  CHECK(orbit[2].coords[0] == 0);
  CHECK(orbit[2].coords[1] == 1);
  CHECK(orbit[3].coords[0] == -1);

  const std::uint64_t K = 256;
  const std::size_t N = 12;
  const auto full = iterate_T(K, N);
  for (std::size_t n = 1; n <= N; ++n) {
    const auto f = Approximant::from_triangle(static_cast<int>(n), K);
    for (std::uint64_t k = 0; k <= K; ++k) {
      REQUIRE(full[k].coords[n - 1] == -f.node_value(k).to_rational());
    }
  }
}
