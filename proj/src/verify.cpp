#include "thue/verify.hpp"

#include "thue/seqcore.hpp"

#include <string>

namespace thue {

Dyadic integral_fn(const Approximant& f, const Dyadic& upper_limit) {
  if (upper_limit.sign() < 0) throw DomainError("integral_fn: X must be >= 0");
  if (upper_limit > f.max_abscissa()) {
    throw OutOfRangeError("integral_fn: X = " + upper_limit.str() + " beyond the built range");
  }
  const int n = f.level();
  const auto shift = static_cast<std::uint64_t>(n - 1);
  const auto whole = static_cast<std::uint64_t>(upper_limit.floor_scaled(shift));
  const auto column = f.column();

  // 2 * sum_{j<=k} S_j - S_0 - S_k, over 2^{e + n}.
  BigInt twice = 0;
  for (std::uint64_t j = 0; j <= whole; ++j) twice += column[j];
  twice = 2 * twice - column[0] - column[whole];
  Dyadic total(twice, node_exponent(n) + shift + 1);

  const Dyadic partial = upper_limit - f.abscissa(whole);
  if (!partial.is_zero()) {
    total += partial * (f.node_value(whole) + f(upper_limit)) * Dyadic(BigInt(1), 1);
  }
  return total;
}

namespace {

Approximant covering(int n, const Dyadic& reach) {
  const BigInt last = reach.floor_scaled(static_cast<std::uint64_t>(n - 1)) + 1;
  return Approximant::from_coefficients(coefficient_row(n, CoefficientMethod::from_recurrence),
                                        static_cast<std::uint64_t>(last));
}

}  // namespace

Dyadic integral_fn(int n, const Dyadic& upper_limit) {
  if (upper_limit.sign() < 0) throw DomainError("integral_fn: X must be >= 0");
  return integral_fn(covering(n, upper_limit), upper_limit);
}

ResidualRecord residual(const Approximant& f, const Dyadic& X) {
  ResidualRecord r;
  r.n = f.level();
  r.X = X;
  r.integral = integral_fn(f, X);
  r.lhs = r.integral + f(Dyadic(0));
  r.rhs = f(X.ldexp(-1));
  r.residual = r.lhs - r.rhs;
  return r;
}

ResidualRecord residual(int n, const Dyadic& X) {
  if (X.sign() < 0) throw DomainError("residual: X must be >= 0");
  return residual(covering(n, X), X);
}

std::vector<ScanRow> residual_scan(int n_min, int n_max, const std::vector<Dyadic>& Xs) {
  if (n_min < 1 || n_max < n_min) throw DomainError("residual_scan: need 1 <= n_min <= n_max");
  Dyadic reach(0);
  for (const auto& X : Xs) {
    if (X.sign() < 0) throw DomainError("residual_scan: X must be >= 0");
    reach = max(reach, X.ldexp(1));
  }
  std::vector<ScanRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    const Approximant f = covering(n, reach);
    for (const auto& X : Xs) {
      rows.push_back({residual(f, X), residual(f, X.ldexp(1)).residual});
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------

namespace {

std::string at(const char* point, std::uint64_t k) {
  return std::string(point) + " k=" + std::to_string(k);
}

void require_cover(const Approximant& f, int m_max) {
  const std::uint64_t block = std::uint64_t{1} << f.level();
  if (f.max_node() < block * static_cast<std::uint64_t>(m_max + 1)) {
    throw OutOfRangeError("approximant of level " + std::to_string(f.level()) +
                          " does not cover [0, " + std::to_string(2 * m_max + 2) + "]");
  }
}

}  // namespace

VerificationReport lemma5_suite(const Approximant& f, const Approximant& g, int m_max) {
  const int n = f.level();
  if (g.level() != n + 1) throw DomainError("lemma5_suite: second approximant must be level n+1");
  if (m_max < 0) throw DomainError("lemma5_suite: m_max must be >= 0");
  require_cover(f, m_max);
  require_cover(g, m_max);

  VerificationReport report("lemma5 n=" + std::to_string(n));
  const std::uint64_t block = std::uint64_t{1} << n;  // nodes per [2m, 2m+2]
  const std::uint64_t half = block / 2;
  const std::uint64_t last = block * static_cast<std::uint64_t>(m_max + 1);
  const Dyadic one(1);
  const Dyadic zero(0);

  // Point 1: integer values.
  for (std::uint64_t m = 0; m <= static_cast<std::uint64_t>(m_max); ++m) {
    const Dyadic um(thue_morse(m).value());
    const Dyadic even = f.node_value(m * block);
    const Dyadic odd = f.node_value(m * block + half);
    report.check(even == zero, at("pt1 f(2m)", m * block), "0", even.str());
    report.check(odd == um, at("pt1 f(2m+1)", m * block + half), um.str(), odd.str());
  }

  // Point 2: range.
  for (std::uint64_t k = 0; k <= last; ++k) {
    const Dyadic v = f.node_value(k);
    report.check(abs(v) <= one, at("pt2", k), "[-1,1]", v.str());
  }

  // Point 3: f(x + 2m) = -u_m f(x) for x in [0, 2].
  for (std::uint64_t m = 1; m <= static_cast<std::uint64_t>(m_max); ++m) {
    const int um = thue_morse(m).value();
    for (std::uint64_t l = 0; l <= block; ++l) {
      const Dyadic expected = Dyadic(-um) * f.node_value(l);
      const Dyadic actual = f.node_value(m * block + l);
      report.check(actual == expected, at("pt3", m * block + l), expected.str(), actual.str());
    }
  }

  // Point 4: monotone halves with direction from u_m, sign of u_m on the block.
  for (std::uint64_t m = 0; m <= static_cast<std::uint64_t>(m_max); ++m) {
    const int um = thue_morse(m).value();
    for (std::uint64_t l = 0; l < block; ++l) {
      const std::uint64_t k = m * block + l;
      const Dyadic step = f.node_value(k + 1) - f.node_value(k);
      // first half: nonincreasing when u_m = -1; second half: the reverse
      const int direction = (l < half ? um : -um);
      report.check(step.sign() * direction >= 0, at("pt4 monotone", k),
                   direction < 0 ? "step<=0" : "step>=0", step.str());
    }
    for (std::uint64_t l = 0; l <= block; ++l) {
      const std::uint64_t k = m * block + l;
      const Dyadic v = f.node_value(k);
      report.check(v.sign() * um >= 0, at("pt4 sign", k),
                   um < 0 ? "<=0" : ">=0", v.str());
    }
  }

  // Point 5: node slopes on [0, 2], at the stated constant 1 and at 2.
  Dyadic steepest(0);
  for (std::uint64_t k = 0; k < block; ++k) {
    const Dyadic slope =
        abs(f.node_value(k + 1) - f.node_value(k)).ldexp(static_cast<std::int64_t>(n - 1));
    steepest = max(steepest, slope);
    report.check(slope <= one, at("pt5 slope<=1", k), "<=1", slope.str());
    report.check(slope <= Dyadic(kLipschitzConstant), at("pt5 slope<=2", k), "<=2", slope.str());
  }
  report.note("pt5 steepest node slope on [0,2] at level " + std::to_string(n) + ": " +
              steepest.str());

  // Points 6 and 7: direction of f_{n+1} - f_n at the level-n nodes.
  for (std::uint64_t k = 0; k <= last; ++k) {
    const std::uint64_t m = std::min(k / block, static_cast<std::uint64_t>(m_max));
    const std::uint64_t l = k - m * block;
    const int um = thue_morse(m).value();
    const Dyadic delta = g.node_value(2 * k) - f.node_value(k);
    // decreasing in n on [2m, 2m+1] when u_m = -1
    const int direction = (l <= half ? um : -um);
    report.check(delta.sign() * direction >= 0, at("pt6-7", k),
                 direction < 0 ? "f_{n+1}<=f_n" : "f_{n+1}>=f_n", delta.str());
  }
  return report;
}

VerificationReport lemma5_suite(int n, int m_max, const BuildOptions& options) {
  if (m_max < 0) throw DomainError("lemma5_suite: m_max must be >= 0");
  const auto blocks = static_cast<std::uint64_t>(m_max + 1);
  const Approximant f = Approximant::from_triangle(n, (std::uint64_t{1} << n) * blocks, options);
  const Approximant g =
      Approximant::from_triangle(n + 1, (std::uint64_t{1} << (n + 1)) * blocks, options);
  return lemma5_suite(f, g, m_max);
}

VerificationReport theorem_value_suite(const Approximant& f, int m_max) {
  if (m_max < 0) throw DomainError("theorem_value_suite: m_max must be >= 0");
  require_cover(f, m_max);
  const int n = f.level();
  VerificationReport report("theorem n=" + std::to_string(n));
  for (long long m = 0; m <= m_max; ++m) {
    const Dyadic um(thue_morse(static_cast<std::uint64_t>(m)).value());
    const Dyadic odd = f(Dyadic(2 * m + 1));
    const Dyadic even = f(Dyadic(2 * m));
    report.check(odd == um, "f(" + std::to_string(2 * m + 1) + ")", um.str(), odd.str());
    report.check(even.is_zero(), "f(" + std::to_string(2 * m) + ")", "0", even.str());
  }
  const std::uint64_t shift_by_two = std::uint64_t{1} << n;
  const std::uint64_t last = shift_by_two * static_cast<std::uint64_t>(m_max);
  for (std::uint64_t k = 0; k <= last; ++k) {
    const Dyadic here = abs(f.node_value(k));
    const Dyadic there = abs(f.node_value(k + shift_by_two));
    report.check(here == there, "|f(x)|=|f(x+2)| x=" + f.abscissa(k).str(), here.str(),
                 there.str());
  }
  for (const Dyadic& x : {Dyadic(BigInt(-1), static_cast<std::uint64_t>(n)), Dyadic(-1),
                          Dyadic(-5)}) {
    const Dyadic v = f(x);
    report.check(v.is_zero(), "f(" + x.str() + ")", "0", v.str());
  }
  return report;
}

VerificationReport theorem_value_suite(int m_max, int n, const BuildOptions& options) {
  if (m_max < 0) throw DomainError("theorem_value_suite: m_max must be >= 0");
  const Approximant f = Approximant::from_triangle(
      n, (std::uint64_t{1} << n) * static_cast<std::uint64_t>(m_max + 1), options);
  return theorem_value_suite(f, m_max);
}

}  // namespace thue
