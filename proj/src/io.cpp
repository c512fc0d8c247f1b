#include "thue/io.hpp"

#include <boost/crc.hpp>

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace thue {

namespace {

std::string cell_text(const BigInt& v) { return v.str(); }
std::string cell_text(const Rational& v) { return to_string(v); }

}  // namespace

template <class Scalar>
void write_triangle_csv(std::ostream& os, const TriangleTable<Scalar>& table, const Window& w) {
  if (w.k_end > table.max_column() + 1 || w.n_end > table.max_depth() + 1) {
    throw OutOfRangeError("CSV window exceeds the built table");
  }
  os << "k,n,value\n";
  for (std::uint64_t k = w.k_begin; k < w.k_end; ++k) {
    for (std::uint64_t n = w.n_begin; n < w.n_end; ++n) {
      os << k << ',' << n << ',' << cell_text(table.at(k, n)) << '\n';
    }
  }
}

template void write_triangle_csv(std::ostream&, const TriangleTable<BigInt>&, const Window&);
template void write_triangle_csv(std::ostream&, const TriangleTable<Rational>&, const Window&);

std::vector<TriangleCell> read_triangle_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "k,n,value") {
    throw DomainError("triangle CSV: missing `k,n,value` header");
  }
  std::vector<TriangleCell> cells;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw DomainError("triangle CSV: malformed row '" + line + "'");
    }
    const BigInt k = parse_integer(std::string_view(line).substr(0, c1));
    const BigInt n = parse_integer(std::string_view(line).substr(c1 + 1, c2 - c1 - 1));
    cells.push_back({static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(n),
                     parse_rational(std::string_view(line).substr(c2 + 1))});
  }
  return cells;
}

std::vector<Sample> sample_fn(const Approximant& f, const Dyadic& a, const Dyadic& b) {
  if (b < a) throw DomainError("sample interval is reversed");
  std::vector<Sample> out;
  out.emplace_back(a, f(a));
  if (a.sign() < 0 && b.sign() > 0) out.emplace_back(Dyadic(0), Dyadic(0));
  const auto shift = static_cast<std::uint64_t>(f.level() - 1);
  const Dyadic from = max(a, Dyadic(0));
  BigInt k = from.floor_scaled(shift) + 1;
  for (;; ++k) {
    const Dyadic x(k, shift);
    if (x >= b) break;
    out.emplace_back(x, f(x));
  }
  if (b != a) out.emplace_back(b, f(b));
  return out;
}

namespace {

std::string decimal(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

}  // namespace

void write_samples_csv(std::ostream& os, const std::vector<Sample>& samples, bool with_decimal) {
  os << (with_decimal ? "x,f,f_decimal\n" : "x,f\n");
  for (const auto& [x, y] : samples) {
    os << x.str() << ',' << y.str();
    if (with_decimal) os << ',' << decimal(y.to_double());
    os << '\n';
  }
}

void write_residual_csv(std::ostream& os, const std::vector<ResidualRecord>& records) {
  os << "n,X,integral,lhs,rhs,residual\n";
  for (const auto& r : records) {
    os << r.n << ',' << r.X.str() << ',' << r.integral.str() << ',' << r.lhs.str() << ','
       << r.rhs.str() << ',' << r.residual.str() << '\n';
  }
}

void write_svg(std::ostream& os, const std::vector<Polyline>& lines) {
  double x_lo = 0, x_hi = 1, y_lo = -1, y_hi = 1;
  bool first = true;
  for (const auto& line : lines) {
    for (const auto& [x, y] : line.points) {
      const double xd = x.to_double();
      const double yd = y.to_double();
      if (first) {
        x_lo = x_hi = xd;
        y_lo = y_hi = yd;
        first = false;
      }
      x_lo = std::min(x_lo, xd);
      x_hi = std::max(x_hi, xd);
      y_lo = std::min(y_lo, yd);
      y_hi = std::max(y_hi, yd);
    }
  }
  const double x_pad = 0.02 * std::max(x_hi - x_lo, 1e-3);
  const double y_pad = 0.05 * std::max(y_hi - y_lo, 1e-3);
  // SVG y grows downward, so plot -f.
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << decimal(x_lo - x_pad) << ' '
     << decimal(-y_hi - y_pad) << ' ' << decimal(x_hi - x_lo + 2 * x_pad) << ' '
     << decimal(y_hi - y_lo + 2 * y_pad)
     << "\" preserveAspectRatio=\"none\" width=\"800\" height=\"400\">\n";
  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                            "#9467bd", "#ff7f0e", "#17becf"};
  std::size_t index = 0;
  for (const auto& line : lines) {
    os << "  <polyline data-label=\"" << line.label << "\" fill=\"none\" stroke=\""
       << kColors[index++ % std::size(kColors)]
       << "\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\" points=\"";
    bool sep = false;
    for (const auto& [x, y] : line.points) {
      if (sep) os << ' ';
      os << decimal(x.to_double()) << ',' << decimal(-y.to_double());
      sep = true;
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
}

// ---------------------------------------------------------------------------

namespace {

std::string checksum(const std::string& body) {
  boost::crc_32_type crc;
  crc.process_bytes(body.data(), body.size());
  std::ostringstream os;
  os << std::hex << std::setw(8) << std::setfill('0') << crc.checksum();
  return os.str();
}

}  // namespace

RowCache::RowCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path RowCache::path_for(const std::string& init_id, std::uint64_t depth) const {
  return dir_ / (init_id + "_n" + std::to_string(depth) + ".row");
}

std::optional<std::vector<BigInt>> RowCache::load(const std::string& init_id,
                                                  std::uint64_t depth,
                                                  std::uint64_t max_column) const {
  const auto path = path_for(init_id, depth);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string header;
  std::getline(in, header);
  std::uint64_t stored_k = 0;
  char sum[9] = {};
  if (std::sscanf(header.c_str(), "# K=%" SCNu64 " crc32=%8s", &stored_k, sum) != 2) {
    throw CacheCorruption("malformed cache header in " + path.string());
  }
  std::ostringstream rest;
  rest << in.rdbuf();
  const std::string body = rest.str();
  if (checksum(body) != sum) {
    throw CacheCorruption("checksum mismatch in " + path.string());
  }
  if (stored_k < max_column) return std::nullopt;
  std::vector<BigInt> row;
  row.reserve(max_column + 1);
  std::istringstream lines(body);
  std::string line;
  while (row.size() <= max_column && std::getline(lines, line)) {
    try {
      row.push_back(parse_integer(line));
    } catch (const DomainError&) {
      throw CacheCorruption("bad value '" + line + "' in " + path.string());
    }
  }
  if (row.size() != max_column + 1) throw CacheCorruption("short row in " + path.string());
  return row;
}

void RowCache::store(const std::string& init_id, std::uint64_t depth,
                     const std::vector<BigInt>& row) const {
  std::string body;
  for (const auto& v : row) {
    body += v.str();
    body += '\n';
  }
  const auto path = path_for(init_id, depth);
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << "# K=" << (row.size() - 1) << " crc32=" << checksum(body) << '\n' << body;
    if (!out) throw std::runtime_error("write failed for cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

TriangleTable<BigInt> cached_table(const InitSpec<BigInt>& init, std::uint64_t max_column,
                                   std::uint64_t max_depth, const RowCache* cache,
                                   const BuildOptions& options) {
  if (cache == nullptr) return TriangleTable<BigInt>::build(init, max_column, max_depth, options);
  if ((max_column + 1) * (max_depth + 1) > options.max_cells) {
    throw ResourceError("cached_table: " + std::to_string((max_column + 1) * (max_depth + 1)) +
                        " cells exceed the budget of " + std::to_string(options.max_cells));
  }
  std::vector<std::vector<BigInt>> rows;
  bool any_hit = false;
  for (std::uint64_t n = 0; n <= max_depth; ++n) {
    if (auto hit = cache->load(init.id, n, max_column)) {
      rows.push_back(std::move(*hit));
      any_hit = true;
      continue;
    }
    std::vector<BigInt> row;
    if (n == 0) {
      for (std::uint64_t k = 0; k <= max_column; ++k) row.push_back(init.column0(k));
    } else {
      const BigInt corner = init.row0 ? init.row0(n) : BigInt(0);
      row = next_depth_row<BigInt>(rows.back(), corner, options.workers);
    }
    cache->store(init.id, n, row);
    rows.push_back(std::move(row));
  }
  auto table = TriangleTable<BigInt>::from_rows(std::move(rows));
  if (!any_hit) return table;

  // A row with a valid checksum can still be wrong; recheck the whole table.
  for (std::uint64_t k = 0; k <= max_column; ++k) {
    if (table.at(k, 0) != init.column0(k)) {
      throw CacheCorruption("cached row n=0 disagrees with the initialization at k=" +
                            std::to_string(k));
    }
  }
  for (std::uint64_t n = 1; n <= max_depth; ++n) {
    const BigInt corner = init.row0 ? init.row0(n) : BigInt(0);
    if (table.at(0, n) != corner) {
      throw CacheCorruption("cached row n=" + std::to_string(n) + " has the wrong corner");
    }
  }
  const auto defects = table.recurrence_defects();
  if (!defects.empty()) {
    throw CacheCorruption("cached rows break the recurrence at k=" +
                          std::to_string(defects.front().first) +
                          " n=" + std::to_string(defects.front().second));
  }
  return table;
}

}  // namespace thue
