#pragma once

#include "thue/dyadic.hpp"
#include "thue/numeric.hpp"
#include "thue/triangle.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace thue {

// x lies beyond the last node of a finitely built approximant.
class OutOfRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Exponent of the node normalization: x^k_n = Sigma^k_n / 2^{(n-1)(n-2)/2}.
std::uint64_t node_exponent(int n);

// The piecewise-linear function f_n: node k sits at abscissa k / 2^{n-1} with
// ordinate x^k_n, linear in between, identically zero for x <= 0. Holds the
// depth-n triangle column Sigma^0_n .. Sigma^K_n.
class Approximant {
 public:
  Approximant(int n, std::vector<BigInt> column);

  // Column read straight off the Thue-Morse triangle recurrence.
  static Approximant from_triangle(int n, std::uint64_t max_node,
                                   const BuildOptions& options = {});
  // Column assembled as Sigma^{2^n m + l}_n = a(n, l) u_m from a coefficient row.
  static Approximant from_coefficients(const CoefficientRow& row, std::uint64_t max_node,
                                       std::size_t max_cells = std::size_t{1} << 26);

  int level() const { return level_; }
  std::uint64_t max_node() const { return column_.size() - 1; }
  // Abscissa of the last node.
  Dyadic max_abscissa() const;
  std::span<const BigInt> column() const { return column_; }

  Dyadic node_value(std::uint64_t k) const;
  Dyadic abscissa(std::uint64_t k) const;
  // Throws OutOfRangeError past the last node; returns 0 for x <= 0.
  Dyadic operator()(const Dyadic& x) const;

 private:
  int level_;
  std::vector<BigInt> column_;
};

Dyadic node_value(int n, std::uint64_t k);
Dyadic eval_fn(int n, const Dyadic& x);

enum class EnclosureStatus { converged, level_cap_reached };

struct IntervalEstimate {
  Dyadic lower;
  Dyadic upper;
  int level_reached = 0;
  EnclosureStatus status = EnclosureStatus::converged;

  Dyadic width() const { return upper - lower; }
};

// Enclosure of f_inf(x), x >= 0. One side comes from the monotone-in-n sequence
// f_n(x) over levels whose grid contains x; the other from the exact values
// f_inf(2m) = 0, f_inf(2m+1) = u_m through 2-Lipschitz cones, the range [-1,1]
// and the sign of u_m on [2m, 2m+2]. Stops once width <= tol or at n_max.
IntervalEstimate eval_finfty(const Dyadic& x, const Dyadic& tol, int n_max = 20);

// Lipschitz constant of every f_n (and of the limit): slopes are 2 f_{n-1} values.
inline constexpr int kLipschitzConstant = 2;

// ---------------------------------------------------------------------------

struct SequenceState {
  std::vector<Rational> coords;  // y_1 .. y_N
  std::uint64_t k = 0;

  friend bool operator==(const SequenceState&, const SequenceState&) = default;
};

SequenceState zero_state(std::size_t length);

// (y_1, y_2 + y_1, y_3 + y_2/2, ..., y_{i} + y_{i-1}/2^{i-2}, ...) truncated to N
// coordinates; coordinate i only reads coordinates <= i, so truncation is exact.
SequenceState operator_T(const SequenceState& state);

// y^0 = 0 and y^{k+1} = T(y^k) - (u_k, 0, ...); returns y^0 .. y^K.
std::vector<SequenceState> iterate_T(std::uint64_t iterations, std::size_t length);

}  // namespace thue
