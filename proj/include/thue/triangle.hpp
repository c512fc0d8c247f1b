#pragma once

#include "thue/numeric.hpp"
#include "thue/report.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace thue {

// Boundary data of the recurrence: column0(k) = Sigma^k_0 for k >= 0 and
// row0(n) = Sigma^0_n for n >= 1 (identically zero when empty). A supplied
// row0 must agree with column0 at the corner, row0(0) == column0(0).
template <class Scalar>
struct InitSpec {
  std::string id;
  std::function<Scalar(std::uint64_t)> column0;
  std::function<Scalar(std::uint64_t)> row0;
};

InitSpec<BigInt> thue_morse_init();
InitSpec<BigInt> zero_init();
// column0 = w(alpha), row0 = 0.
InitSpec<Rational> sturmian_init(const Rational& alpha);

struct BuildOptions {
  // Upper bound on the number of scalars held at once.
  std::size_t max_cells = std::size_t{1} << 26;
  unsigned workers = 1;
};

// Dense grid Sigma^k_n, 0 <= k <= K, 0 <= n <= N, stored row-major by depth n.
// Immutable once built.
template <class Scalar>
class TriangleTable {
 public:
  static TriangleTable build(const InitSpec<Scalar>& init, std::uint64_t max_column,
                             std::uint64_t max_depth, const BuildOptions& options = {});
  // Wraps externally produced rows (e.g. loaded from a cache) without checking
  // the recurrence; use recurrence_defects() for that. All rows must have equal length.
  static TriangleTable from_rows(std::vector<std::vector<Scalar>> rows);

  std::uint64_t max_column() const { return rows_.front().size() - 1; }
  std::uint64_t max_depth() const { return rows_.size() - 1; }

  const Scalar& at(std::uint64_t k, std::uint64_t n) const { return rows_.at(n).at(k); }
  std::span<const Scalar> row(std::uint64_t n) const { return rows_.at(n); }

  // Interior cells (k+1, n+1) where Sigma^{k+1}_{n+1} != Sigma^k_n + Sigma^k_{n+1}.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> recurrence_defects() const;

  friend bool operator==(const TriangleTable&, const TriangleTable&) = default;

 private:
  explicit TriangleTable(std::vector<std::vector<Scalar>> rows) : rows_(std::move(rows)) {}
  std::vector<std::vector<Scalar>> rows_;
};

// Row n+1 from row n: out[0] = corner, out[k+1] = out[k] + prev[k].
template <class Scalar>
std::vector<Scalar> next_depth_row(std::span<const Scalar> prev, const Scalar& corner,
                                   unsigned workers = 1);

// Only row `depth` (columns 0..max_column), streaming and discarding earlier rows.
template <class Scalar>
std::vector<Scalar> triangle_row(const InitSpec<Scalar>& init, std::uint64_t max_column,
                                 std::uint64_t depth, const BuildOptions& options = {});

// ---------------------------------------------------------------------------
// Coefficient rows a(n, l), l < 2^n, with Sigma^{2^n k + l}_n = a(n, l) u_k.

struct CoefficientRow {
  int n = 0;
  std::vector<BigInt> values;
  BigInt central;  // a(n, 2^{n-1})

  friend bool operator==(const CoefficientRow&, const CoefficientRow&) = default;
};

enum class CoefficientMethod { from_table, from_recurrence };

struct RowLimits {
  int max_level = 24;  // rows have 2^n entries
};

// 2^{(n-1)(n-2)/2}.
BigInt central_value(int n);

CoefficientRow coefficient_row(int n, CoefficientMethod method, const RowLimits& limits = {});

// Row n+1 from row n via a(n+1,l+1) = a(n+1,l) + a(n,l) and
// a(n+1,l+2^n+1) = a(n+1,l+2^n) - a(n,l).
CoefficientRow next_coefficient_row(const CoefficientRow& row);

// Rows 1..n_max from the recurrence.
std::vector<CoefficientRow> coefficient_rows(int n_max, const RowLimits& limits = {});

// Reads a(n, l) = -Sigma^l_n off column 0..2^n-1 of a Thue-Morse table.
CoefficientRow coefficient_row_from_table(const TriangleTable<BigInt>& table, int n);

// ---------------------------------------------------------------------------
// Checkers. Each returns a report whose failures name the offending indices.

// Every column c <= table.max_column() at depth n: Sigma^c_n == row.values[c mod 2^n] * u_{c / 2^n}.
VerificationReport verify_lemma1(const TriangleTable<BigInt>& table, const CoefficientRow& row);
// Builds a Thue-Morse table to column 2^n K - 1 (k = 0..K-1) and checks it
// against the recurrence row a(n, .).
VerificationReport verify_lemma1(int n, std::uint64_t num_blocks, const BuildOptions& options = {});

// a(n,0) = 0, central = 2^{(n-1)(n-2)/2}, 0 <= a(n,l) <= central, sum_l a(n,l) = a(n+1,2^n),
// first half of row n+1 nondecreasing, a(n+1,l+2^n) = a(n+1,2^n) - a(n+1,l).
VerificationReport check_bounds_and_symmetry(const CoefficientRow& row, const CoefficientRow& next);
VerificationReport check_bounds_and_symmetry(int n);

// a(n,2l+1) >= a(n,2l) >= 2^{n-2} a(n-1,l) for l < 2^{n-2}. The form with a(n,l)
// on the right is also evaluated and its counterexamples are carried as notes.
VerificationReport check_growth(const CoefficientRow& prev, const CoefficientRow& row);
VerificationReport check_growth(int n);

template <class Scalar>
struct ProbePoint {
  std::uint64_t k;
  Scalar running_max;  // max_{j <= k} |Sigma^j_n|
};

// Running maxima at k = 1, 2, 4, ... and at max_column.
template <class Scalar>
std::vector<ProbePoint<Scalar>> boundedness_probe(const InitSpec<Scalar>& init,
                                                  std::uint64_t depth,
                                                  std::uint64_t max_column,
                                                  const BuildOptions& options = {});

}  // namespace thue
