#pragma once

#include "thue/approximant.hpp"
#include "thue/dyadic.hpp"
#include "thue/triangle.hpp"
#include "thue/verify.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thue {

// Half-open index window [k_begin, k_end) x [n_begin, n_end).
struct Window {
  std::uint64_t k_begin = 0;
  std::uint64_t k_end = 0;
  std::uint64_t n_begin = 0;
  std::uint64_t n_end = 0;
};

// Header `k,n,value`; rows ordered by k, then n. Values are exact integers or p/q.
template <class Scalar>
void write_triangle_csv(std::ostream& os, const TriangleTable<Scalar>& table, const Window& w);

struct TriangleCell {
  std::uint64_t k;
  std::uint64_t n;
  Rational value;
  friend bool operator==(const TriangleCell&, const TriangleCell&) = default;
};

std::vector<TriangleCell> read_triangle_csv(std::istream& is);

using Sample = std::pair<Dyadic, Dyadic>;

// f over [a, b]: both endpoints plus every node strictly between them, and 0 when
// a < 0 < b.
std::vector<Sample> sample_fn(const Approximant& f, const Dyadic& a, const Dyadic& b);

// Header `x,f` (or `x,f,f_decimal`); exact fields, decimal column informational.
void write_samples_csv(std::ostream& os, const std::vector<Sample>& samples,
                       bool with_decimal = true);

// Header `n,X,integral,lhs,rhs,residual`.
void write_residual_csv(std::ostream& os, const std::vector<ResidualRecord>& records);

struct Polyline {
  std::string label;
  std::vector<Sample> points;
};

// One SVG <polyline> per entry; viewBox spans the data with a small margin.
void write_svg(std::ostream& os, const std::vector<Polyline>& lines);

// ---------------------------------------------------------------------------

class CacheCorruption : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One text file per (init id, depth): `# K=<K> crc32=<hex>` then one decimal
// value per line for columns 0..K.
class RowCache {
 public:
  explicit RowCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& init_id, std::uint64_t depth) const;

  // Columns 0..max_column if a file with at least that many exists; throws
  // CacheCorruption on a checksum or format mismatch.
  std::optional<std::vector<BigInt>> load(const std::string& init_id, std::uint64_t depth,
                                          std::uint64_t max_column) const;
  void store(const std::string& init_id, std::uint64_t depth,
             const std::vector<BigInt>& row) const;

 private:
  std::filesystem::path dir_;
};

// Builds the table row by row, reusing and filling `cache` when given.
TriangleTable<BigInt> cached_table(const InitSpec<BigInt>& init, std::uint64_t max_column,
                                   std::uint64_t max_depth, const RowCache* cache,
                                   const BuildOptions& options = {});

}  // namespace thue
