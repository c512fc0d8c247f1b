#include "thue/triangle.hpp"

#include "thue/parallel_scan.hpp"
#include "thue/seqcore.hpp"

#include <string>

namespace thue {

InitSpec<BigInt> thue_morse_init() {
  return {"thue_morse", [](std::uint64_t k) { return BigInt(thue_morse(k).value()); }, {}};
}

InitSpec<BigInt> zero_init() {
  return {"zero", [](std::uint64_t) { return BigInt(0); }, {}};
}

InitSpec<Rational> sturmian_init(const Rational& alpha) {
  sturmian_v(alpha, 0);  // validates alpha
  std::string id = "sturmian_" + to_string(alpha);
  for (char& c : id) {
    if (c == '/') c = '_';
  }
  return {id, [alpha](std::uint64_t k) { return sturmian_w(alpha, k); }, {}};
}

namespace {

template <class Scalar>
Scalar corner_value(const InitSpec<Scalar>& init, std::uint64_t depth) {
  if (depth == 0) return init.column0(0);
  if (!init.row0) return Scalar(0);
  return init.row0(depth);
}

template <class Scalar>
void check_init(const InitSpec<Scalar>& init) {
  if (!init.column0) throw DomainError("InitSpec: column0 generator missing");
  if (init.row0 && init.row0(0) != init.column0(0)) {
    throw DomainError("InitSpec '" + init.id + "': row0(0) differs from column0(0)");
  }
}

template <class Scalar>
std::vector<Scalar> column_zero(const InitSpec<Scalar>& init, std::uint64_t max_column) {
  std::vector<Scalar> row;
  row.reserve(max_column + 1);
  for (std::uint64_t k = 0; k <= max_column; ++k) row.push_back(init.column0(k));
  return row;
}

void check_budget(std::uint64_t cells, std::size_t budget, const char* what) {
  if (cells > budget) {
    throw ResourceError(std::string(what) + ": " + std::to_string(cells) +
                        " cells exceed the budget of " + std::to_string(budget));
  }
}

}  // namespace

template <class Scalar>
std::vector<Scalar> next_depth_row(std::span<const Scalar> prev, const Scalar& corner,
                                   unsigned workers) {
  std::vector<Scalar> out(prev.size());
  if (prev.empty()) return out;
  // The last entry of prev feeds column K+1, which is outside the window.
  exclusive_scan<Scalar>(prev.first(prev.size() - 1), corner, out, workers);
  return out;
}

template <class Scalar>
TriangleTable<Scalar> TriangleTable<Scalar>::build(const InitSpec<Scalar>& init,
                                                   std::uint64_t max_column,
                                                   std::uint64_t max_depth,
                                                   const BuildOptions& options) {
  check_init(init);
  if (max_column + 1 == 0 || max_depth + 1 == 0) throw ResourceError("table bounds overflow");
  check_budget((max_column + 1) * (max_depth + 1), options.max_cells, "build_triangle");
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(max_depth + 1);
  rows.push_back(column_zero(init, max_column));
  for (std::uint64_t n = 1; n <= max_depth; ++n) {
    rows.push_back(next_depth_row<Scalar>(rows.back(), corner_value(init, n), options.workers));
  }
  return TriangleTable(std::move(rows));
}

template <class Scalar>
TriangleTable<Scalar> TriangleTable<Scalar>::from_rows(std::vector<std::vector<Scalar>> rows) {
  if (rows.empty() || rows.front().empty()) throw DomainError("from_rows: empty table");
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw DomainError("from_rows: ragged rows");
  }
  return TriangleTable(std::move(rows));
}

template <class Scalar>
std::vector<std::pair<std::uint64_t, std::uint64_t>>
TriangleTable<Scalar>::recurrence_defects() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t n = 0; n < max_depth(); ++n) {
    for (std::uint64_t k = 0; k < max_column(); ++k) {
      if (rows_[n + 1][k + 1] != rows_[n][k] + rows_[n + 1][k]) out.emplace_back(k + 1, n + 1);
    }
  }
  return out;
}

template <class Scalar>
std::vector<Scalar> triangle_row(const InitSpec<Scalar>& init, std::uint64_t max_column,
                                 std::uint64_t depth, const BuildOptions& options) {
  check_init(init);
  check_budget(2 * (max_column + 1), options.max_cells, "triangle_row");
  std::vector<Scalar> row = column_zero(init, max_column);
  for (std::uint64_t n = 1; n <= depth; ++n) {
    row = next_depth_row<Scalar>(row, corner_value(init, n), options.workers);
  }
  return row;
}

template class TriangleTable<BigInt>;
template class TriangleTable<Rational>;
template std::vector<BigInt> next_depth_row(std::span<const BigInt>, const BigInt&, unsigned);
template std::vector<Rational> next_depth_row(std::span<const Rational>, const Rational&,
                                              unsigned);
template std::vector<BigInt> triangle_row(const InitSpec<BigInt>&, std::uint64_t,
                                          std::uint64_t, const BuildOptions&);
template std::vector<Rational> triangle_row(const InitSpec<Rational>&, std::uint64_t,
                                            std::uint64_t, const BuildOptions&);

// ---------------------------------------------------------------------------

BigInt central_value(int n) {
  if (n < 1) throw DomainError("central_value: n must be >= 1");
  const auto e = static_cast<unsigned>((n - 1) * (n - 2) / 2);
  return BigInt(1) << e;
}

namespace {

void check_level(int n, const RowLimits& limits) {
  if (n < 1) throw DomainError("coefficient rows start at n = 1");
  if (n > limits.max_level) {
    throw ResourceError("coefficient row n = " + std::to_string(n) +
                        " exceeds the row-length budget 2^" + std::to_string(limits.max_level));
  }
}

CoefficientRow first_row() { return {1, {BigInt(0), BigInt(1)}, BigInt(1)}; }

}  // namespace

CoefficientRow next_coefficient_row(const CoefficientRow& row) {
  const std::size_t half = row.values.size();  // 2^n
  CoefficientRow out;
  out.n = row.n + 1;
  out.values.resize(2 * half);
  out.values[0] = 0;
  for (std::size_t l = 0; l + 1 < half; ++l) out.values[l + 1] = out.values[l] + row.values[l];
  // a(n+1, 2^n) is reached from l = 2^n - 1 of the first relation.
  out.values[half] = out.values[half - 1] + row.values[half - 1];
  for (std::size_t l = 0; l + 1 < half; ++l) {
    out.values[l + half + 1] = out.values[l + half] - row.values[l];
  }
  out.central = out.values[half];
  return out;
}

std::vector<CoefficientRow> coefficient_rows(int n_max, const RowLimits& limits) {
  check_level(n_max, limits);
  std::vector<CoefficientRow> rows{first_row()};
  while (rows.back().n < n_max) rows.push_back(next_coefficient_row(rows.back()));
  return rows;
}

CoefficientRow coefficient_row_from_table(const TriangleTable<BigInt>& table, int n) {
  const std::uint64_t width = std::uint64_t{1} << n;
  if (table.max_depth() < static_cast<std::uint64_t>(n) || table.max_column() + 1 < width) {
    throw DomainError("table too small for coefficient row " + std::to_string(n));
  }
  CoefficientRow out;
  out.n = n;
  out.values.reserve(width);
  // Sigma^l_n = a(n, l) u_0 and u_0 = -1.
  for (std::uint64_t l = 0; l < width; ++l) out.values.push_back(-table.at(l, n));
  out.central = out.values[width / 2];
  return out;
}

CoefficientRow coefficient_row(int n, CoefficientMethod method, const RowLimits& limits) {
  check_level(n, limits);
  if (method == CoefficientMethod::from_recurrence) return coefficient_rows(n, limits).back();
  const std::uint64_t width = std::uint64_t{1} << n;
  BuildOptions options;
  options.max_cells = std::max<std::size_t>(options.max_cells, 2 * width);
  std::vector<BigInt> column = triangle_row(thue_morse_init(), width - 1, n, options);
  CoefficientRow out;
  out.n = n;
  out.values.reserve(width);
  for (auto& v : column) out.values.push_back(-v);
  out.central = out.values[width / 2];
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string idx(std::initializer_list<std::uint64_t> parts) {
  std::string s = "(";
  bool first = true;
  for (auto p : parts) {
    if (!first) s += ",";
    s += std::to_string(p);
    first = false;
  }
  return s + ")";
}

}  // namespace

VerificationReport verify_lemma1(const TriangleTable<BigInt>& table, const CoefficientRow& row) {
  VerificationReport report("lemma1");
  const int n = row.n;
  const std::uint64_t width = row.values.size();
  const auto depth = table.row(static_cast<std::uint64_t>(n));
  for (std::uint64_t c = 0; c < depth.size(); ++c) {
    const std::uint64_t k = c / width;
    const std::uint64_t l = c % width;
    const BigInt expected = row.values[l] * thue_morse(k).value();
    report.check(depth[c] == expected, "n,k,l=" + idx({std::uint64_t(n), k, l}),
                 expected.str(), depth[c].str());
  }
  return report;
}

VerificationReport verify_lemma1(int n, std::uint64_t num_blocks, const BuildOptions& options) {
  if (num_blocks == 0) throw DomainError("verify_lemma1: need at least one block");
  const CoefficientRow row = coefficient_row(n, CoefficientMethod::from_recurrence);
  const std::uint64_t width = std::uint64_t{1} << n;
  const auto table = TriangleTable<BigInt>::build(thue_morse_init(), width * num_blocks - 1,
                                                  static_cast<std::uint64_t>(n), options);
  return verify_lemma1(table, row);
}

VerificationReport check_bounds_and_symmetry(const CoefficientRow& row,
                                             const CoefficientRow& next) {
  VerificationReport report("bounds");
  const int n = row.n;
  const std::size_t width = row.values.size();
  if (next.n != n + 1 || next.values.size() != 2 * width) {
    throw DomainError("check_bounds_and_symmetry: rows n and n+1 required");
  }
  const BigInt bound = central_value(n);
  report.check(row.values[0] == 0, "a(n,0)=0 n=" + std::to_string(n), "0", row.values[0].str());
  report.check(row.central == bound, "central n=" + std::to_string(n), bound.str(),
               row.central.str());
  report.check(row.values[width / 2] == row.central, "central-slot n=" + std::to_string(n),
               row.central.str(), row.values[width / 2].str());
  BigInt sum = 0;
  for (std::size_t l = 0; l < width; ++l) {
    const BigInt& a = row.values[l];
    report.check(a >= 0 && a <= bound, "range " + idx({std::uint64_t(n), l}),
                 "[0," + bound.str() + "]", a.str());
    sum += a;
  }
  report.check(sum == next.values[width], "block-sum n=" + std::to_string(n),
               next.values[width].str(), sum.str());
  for (std::size_t l = 0; l < width; ++l) {
    report.check(next.values[l] <= next.values[l + 1],
                 "monotone " + idx({std::uint64_t(n + 1), l}),
                 "<= " + next.values[l + 1].str(), next.values[l].str());
    const BigInt mirrored = next.values[width] - next.values[l];
    report.check(next.values[l + width] == mirrored,
                 "symmetry " + idx({std::uint64_t(n + 1), l + width}), mirrored.str(),
                 next.values[l + width].str());
  }
  return report;
}

VerificationReport check_bounds_and_symmetry(int n) {
  const auto rows = coefficient_rows(n + 1);
  return check_bounds_and_symmetry(rows[static_cast<std::size_t>(n - 1)], rows.back());
}

VerificationReport check_growth(const CoefficientRow& prev, const CoefficientRow& row) {
  VerificationReport report("growth");
  const int n = row.n;
  if (n < 3 || prev.n != n - 1) throw DomainError("check_growth: rows n-1 and n, n >= 3");
  const std::size_t quarter = row.values.size() / 4;  // 2^{n-2}
  const BigInt factor = BigInt(1) << (n - 2);
  std::size_t printed_failures = 0;
  std::string listed;
  for (std::size_t l = 0; l < quarter; ++l) {
    const BigInt& odd = row.values[2 * l + 1];
    const BigInt& even = row.values[2 * l];
    const BigInt floor_prev = factor * prev.values[l];
    report.check(odd >= even && even >= floor_prev, "chain " + idx({std::uint64_t(n), l}),
                 odd.str() + ">=" + even.str() + ">=" + floor_prev.str(),
                 odd >= even ? "second link broken" : "first link broken");
    const BigInt floor_same = factor * row.values[l];
    if (even < floor_same && printed_failures++ < 8) {
      listed += " l=" + std::to_string(l) + " (a(" + std::to_string(n) + "," +
                std::to_string(2 * l) + ")=" + even.str() + " < " + floor_same.str() + ")";
    }
  }
  if (printed_failures > 0) {
    report.note("printed form a(n,2l) >= 2^{n-2} a(n,l) fails at n=" + std::to_string(n) +
                " for " + std::to_string(printed_failures) + " of " + std::to_string(quarter) +
                " values of l:" + listed + (printed_failures > 8 ? " ..." : ""));
  }
  return report;
}

VerificationReport check_growth(int n) {
  const auto rows = coefficient_rows(n);
  return check_growth(rows[static_cast<std::size_t>(n - 2)], rows.back());
}

template <class Scalar>
std::vector<ProbePoint<Scalar>> boundedness_probe(const InitSpec<Scalar>& init,
                                                  std::uint64_t depth,
                                                  std::uint64_t max_column,
                                                  const BuildOptions& options) {
  const std::vector<Scalar> row = triangle_row(init, max_column, depth, options);
  std::vector<ProbePoint<Scalar>> out;
  Scalar running = 0;
  std::uint64_t next_checkpoint = 1;
  for (std::uint64_t k = 0; k <= max_column; ++k) {
    const Scalar magnitude = row[k] < 0 ? Scalar(-row[k]) : row[k];
    if (magnitude > running) running = magnitude;
    if (k == next_checkpoint) {
      out.push_back({k, running});
      next_checkpoint *= 2;
    }
  }
  if (max_column >= 1 && out.back().k != max_column) out.push_back({max_column, running});
  return out;
}

template std::vector<ProbePoint<BigInt>> boundedness_probe(const InitSpec<BigInt>&,
                                                           std::uint64_t, std::uint64_t,
                                                           const BuildOptions&);
template std::vector<ProbePoint<Rational>> boundedness_probe(const InitSpec<Rational>&,
                                                             std::uint64_t, std::uint64_t,
                                                             const BuildOptions&);

}  // namespace thue
