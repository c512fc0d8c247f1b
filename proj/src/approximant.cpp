#include "thue/approximant.hpp"

#include "thue/seqcore.hpp"

#include <string>

namespace thue {

std::uint64_t node_exponent(int n) {
  if (n < 1) throw DomainError("approximant level must be >= 1");
  return static_cast<std::uint64_t>(n - 1) * static_cast<std::uint64_t>(n - 2) / 2;
}

Approximant::Approximant(int n, std::vector<BigInt> column)
    : level_(n), column_(std::move(column)) {
  node_exponent(n);
  if (column_.empty()) throw DomainError("approximant needs at least one node");
}

Approximant Approximant::from_triangle(int n, std::uint64_t max_node,
                                       const BuildOptions& options) {
  node_exponent(n);
  return Approximant(n, triangle_row(thue_morse_init(), max_node,
                                     static_cast<std::uint64_t>(n), options));
}

Approximant Approximant::from_coefficients(const CoefficientRow& row, std::uint64_t max_node,
                                           std::size_t max_cells) {
  if (max_node >= max_cells) {
    throw ResourceError("approximant with " + std::to_string(max_node + 1) +
                        " nodes exceeds the budget of " + std::to_string(max_cells));
  }
  const std::uint64_t width = row.values.size();
  std::vector<BigInt> column;
  column.reserve(max_node + 1);
  for (std::uint64_t k = 0; k <= max_node; ++k) {
    const BigInt& a = row.values[k % width];
    column.push_back(thue_morse(k / width) == Sign::plus() ? a : BigInt(-a));
  }
  return Approximant(row.n, std::move(column));
}

Dyadic Approximant::node_value(std::uint64_t k) const {
  if (k >= column_.size()) {
    throw OutOfRangeError("node " + std::to_string(k) + " beyond the built range (last " +
                          std::to_string(max_node()) + ")");
  }
  return Dyadic(column_[k], node_exponent(level_));
}

Dyadic Approximant::abscissa(std::uint64_t k) const {
  return Dyadic(BigInt(k), static_cast<std::uint64_t>(level_ - 1));
}

Dyadic Approximant::max_abscissa() const { return abscissa(max_node()); }

Dyadic Approximant::operator()(const Dyadic& x) const {
  if (x.sign() <= 0) return Dyadic(0);
  const auto shift = static_cast<std::uint64_t>(level_ - 1);
  const BigInt cell = x.floor_scaled(shift);
  if (cell > max_node()) {
    throw OutOfRangeError("x = " + x.str() + " beyond the built range [0, " +
                          max_abscissa().str() + "]");
  }
  const auto k = static_cast<std::uint64_t>(cell);
  // delta_x * 2^{n-1}, in [0, 1)
  const Dyadic frac = x.ldexp(static_cast<std::int64_t>(shift)) - Dyadic(cell);
  const Dyadic left = node_value(k);
  if (frac.is_zero()) return left;
  if (k == max_node()) {
    throw OutOfRangeError("x = " + x.str() + " beyond the built range [0, " +
                          max_abscissa().str() + "]");
  }
  return left + frac * (node_value(k + 1) - left);
}

Dyadic node_value(int n, std::uint64_t k) {
  const auto row = coefficient_row(n, CoefficientMethod::from_recurrence);
  const BigInt& a = row.values[k % row.values.size()];
  const BigInt sigma = thue_morse(k / row.values.size()) == Sign::plus() ? a : BigInt(-a);
  return Dyadic(sigma, node_exponent(n));
}

Dyadic eval_fn(int n, const Dyadic& x) {
  if (x.sign() <= 0) return Dyadic(0);
  const BigInt last = x.floor_scaled(static_cast<std::uint64_t>(n - 1)) + 1;
  const auto row = coefficient_row(n, CoefficientMethod::from_recurrence);
  return Approximant::from_coefficients(row, static_cast<std::uint64_t>(last))(x);
}

// ---------------------------------------------------------------------------

namespace {

// f_inf at an integer abscissa: 0 at even, u_m at 2m+1, 0 for negatives.
Dyadic exact_integer_value(const BigInt& j) {
  if (j <= 0 || (j & 1) == 0) return Dyadic(0);
  return Dyadic(thue_morse(static_cast<std::uint64_t>(j >> 1)).value());
}

}  // namespace

IntervalEstimate eval_finfty(const Dyadic& x, const Dyadic& tol, int n_max) {
  if (tol.sign() <= 0) throw DomainError("eval_finfty: tolerance must be positive");
  if (x.sign() <= 0 || x.is_integer()) {
    const Dyadic v = exact_integer_value(x.floor());
    return {v, v, 0, EnclosureStatus::converged};
  }

  const BigInt m = x.floor_scaled(0) >> 1;
  const Sign u = thue_morse(static_cast<std::uint64_t>(m));
  const bool first_half = x.floor() == 2 * m;

  Dyadic lower(-1);
  Dyadic upper(1);
  if (u == Sign::minus()) {
    upper = min(upper, Dyadic(0));
  } else {
    lower = max(lower, Dyadic(0));
  }
  const BigInt left = x.floor();
  const Dyadic left_x(left);
  const Dyadic right_x(BigInt(left + 1));
  const Dyadic left_v = exact_integer_value(left);
  const Dyadic right_v = exact_integer_value(left + 1);
  const Dyadic lip(kLipschitzConstant);
  lower = max(lower, max(left_v - lip * (x - left_x), right_v - lip * (right_x - x)));
  upper = min(upper, min(left_v + lip * (x - left_x), right_v + lip * (right_x - x)));

  // f_n(x) decreases in n on [2m, 2m+1] when u_m = -1; every other case follows by
  // symmetry.
  const bool decreasing = first_half == (u == Sign::minus());

  IntervalEstimate est{lower, upper, 0, EnclosureStatus::level_cap_reached};
  if (est.width() <= tol) {
    est.status = EnclosureStatus::converged;
    return est;
  }
  const int first_level = static_cast<int>(x.exponent()) + 1;
  if (first_level > n_max) return est;

  auto rows = coefficient_rows(first_level);
  CoefficientRow row = std::move(rows.back());
  for (int n = first_level; n <= n_max; ++n) {
    if (n > first_level) row = next_coefficient_row(row);
    const BigInt k = x.numerator_at(static_cast<std::uint64_t>(n - 1));
    const std::uint64_t width = row.values.size();
    const BigInt& a = row.values[static_cast<std::size_t>(k % width)];
    const bool positive = thue_morse(static_cast<std::uint64_t>(k / width)) == Sign::plus();
    const Dyadic value(positive ? a : BigInt(-a), node_exponent(n));
    if (decreasing) {
      est.upper = min(est.upper, value);
    } else {
      est.lower = max(est.lower, value);
    }
    est.level_reached = n;
    if (est.width() <= tol) {
      est.status = EnclosureStatus::converged;
      break;
    }
  }
  return est;
}

// ---------------------------------------------------------------------------

SequenceState zero_state(std::size_t length) {
  if (length == 0) throw DomainError("sequence state needs at least one coordinate");
  return {std::vector<Rational>(length, Rational(0)), 0};
}

SequenceState operator_T(const SequenceState& state) {
  const auto& y = state.coords;
  if (y.empty()) throw DomainError("operator_T: empty state");
  SequenceState out{std::vector<Rational>(y.size()), state.k};
  out.coords[0] = y[0];
  for (std::size_t i = 1; i < y.size(); ++i) {
    const Rational scale(BigInt(1), BigInt(1) << (i - 1));
    out.coords[i] = y[i] + y[i - 1] * scale;
  }
  return out;
}

std::vector<SequenceState> iterate_T(std::uint64_t iterations, std::size_t length) {
  std::vector<SequenceState> orbit{zero_state(length)};
  orbit.reserve(iterations + 1);
  for (std::uint64_t k = 0; k < iterations; ++k) {
    SequenceState next = operator_T(orbit.back());
    next.coords[0] -= thue_morse(k).value();
    next.k = k + 1;
    orbit.push_back(std::move(next));
  }
  return orbit;
}

}  // namespace thue
