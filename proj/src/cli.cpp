#include "thue/cli.hpp"

#include "thue/approximant.hpp"
#include "thue/io.hpp"
#include "thue/seqcore.hpp"
#include "thue/triangle.hpp"
#include "thue/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <thread>

namespace thue::cli {

namespace {

struct RunConfig {
  std::string command;
  std::optional<int> n;
  std::optional<std::uint64_t> k_max;
  std::optional<int> m_max;
  std::vector<std::string> xs;
  std::string levels;
  std::string interval;
  std::string alpha;
  std::string suite;
  std::string method = "recurrence";
  std::string tol = "1/1024";
  bool limit = false;
  std::string out;
  std::string cache_dir;
  std::size_t mem_budget_mb = 512;
};

// Rough footprint of one small cpp_int cell plus vector overhead.
constexpr std::size_t kBytesPerCell = 64;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

BuildOptions build_options(const RunConfig& cfg) {
  if (cfg.mem_budget_mb == 0) throw UsageError("--mem-budget-mb must be positive");
  BuildOptions options;
  options.max_cells = cfg.mem_budget_mb * (std::size_t{1} << 20) / kBytesPerCell;
  options.workers = std::max(1u, std::thread::hardware_concurrency());
  return options;
}

std::unique_ptr<RowCache> open_cache(const RunConfig& cfg) {
  std::string dir = cfg.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("TMP_CACHE_DIR")) dir = env;
  }
  if (dir.empty()) return nullptr;
  return std::make_unique<RowCache>(dir);
}

int require_positive(const std::optional<int>& v, int fallback, const char* flag) {
  const int value = v.value_or(fallback);
  if (value < 1) throw UsageError(std::string(flag) + " must be positive");
  return value;
}

std::vector<int> parse_levels(const std::string& text) {
  std::vector<int> levels;
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const BigInt lo = parse_integer(std::string_view(text).substr(0, colon));
    const BigInt hi = parse_integer(std::string_view(text).substr(colon + 1));
    if (lo < 1 || hi < lo || hi > 64) throw UsageError("bad level range '" + text + "'");
    for (int n = static_cast<int>(lo); n <= static_cast<int>(hi); ++n) levels.push_back(n);
    return levels;
  }
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const BigInt n = parse_integer(rest.substr(0, comma));
    if (n < 1 || n > 64) throw UsageError("bad level '" + text + "'");
    levels.push_back(static_cast<int>(n));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (levels.empty()) throw UsageError("empty level list");
  return levels;
}

std::pair<Dyadic, Dyadic> parse_interval(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("interval must be a:b, got '" + text + "'");
  const Dyadic a = Dyadic::parse(std::string_view(text).substr(0, colon));
  const Dyadic b = Dyadic::parse(std::string_view(text).substr(colon + 1));
  if (b < a) throw UsageError("interval end precedes its start");
  return {a, b};
}

// Runs `body` against --out when given, otherwise against `fallback`.
void emit(const RunConfig& cfg, std::ostream& fallback,
          const std::function<void(std::ostream&)>& body) {
  if (cfg.out.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw std::ios_base::failure("cannot open '" + cfg.out + "' for writing");
  body(file);
  file.flush();
  if (!file) throw std::ios_base::failure("write failed for '" + cfg.out + "'");
}

TriangleTable<BigInt> thue_morse_table(const RunConfig& cfg, std::uint64_t max_column,
                                       std::uint64_t max_depth) {
  const auto cache = open_cache(cfg);
  return cached_table(thue_morse_init(), max_column, max_depth, cache.get(), build_options(cfg));
}

VerificationReport recurrence_report(const TriangleTable<BigInt>& table) {
  VerificationReport report("table recurrence");
  const auto defects = table.recurrence_defects();
  for (const auto& [k, n] : defects) {
    report.fail("cell k=" + std::to_string(k) + " n=" + std::to_string(n),
                "Sigma^{k-1}_{n-1}+Sigma^{k-1}_n", table.at(k, n).str());
  }
  if (defects.empty()) report.pass();
  return report;
}

// ---------------------------------------------------------------------------

int cmd_triangle(const RunConfig& cfg, std::ostream& out) {
  const int depth = cfg.n.value_or(4);
  if (depth < 0) throw UsageError("--n must be >= 0");
  const std::uint64_t k_max = cfg.k_max.value_or(4);
  const Window w{0, k_max + 1, 0, static_cast<std::uint64_t>(depth) + 1};
  if (!cfg.alpha.empty()) {
    const auto table = TriangleTable<Rational>::build(sturmian_init(parse_rational(cfg.alpha)),
                                                      k_max, static_cast<std::uint64_t>(depth),
                                                      build_options(cfg));
    emit(cfg, out, [&](std::ostream& os) { write_triangle_csv(os, table, w); });
    return kOk;
  }
  const auto table = thue_morse_table(cfg, k_max, static_cast<std::uint64_t>(depth));
  emit(cfg, out, [&](std::ostream& os) { write_triangle_csv(os, table, w); });
  return kOk;
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.n) throw UsageError("coeffs requires --n");
  const int n = require_positive(cfg.n, 1, "--n");
  CoefficientMethod method;
  if (cfg.method == "recurrence") {
    method = CoefficientMethod::from_recurrence;
  } else if (cfg.method == "table") {
    method = CoefficientMethod::from_table;
  } else {
    throw UsageError("--method must be table or recurrence");
  }
  const auto row = coefficient_row(n, method);
  emit(cfg, out, [&](std::ostream& os) {
    for (std::size_t l = 0; l < row.values.size(); ++l) {
      if (l) os << ',';
      os << row.values[l];
    }
    os << '\n';
  });
  return kOk;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  if (cfg.limit) {
    if (cfg.xs.empty()) throw UsageError("eval --limit requires --x");
    const Dyadic tol = Dyadic::parse(cfg.tol);
    const int n_max = cfg.n.value_or(20);
    emit(cfg, out, [&](std::ostream& os) {
      for (const auto& text : cfg.xs) {
        const Dyadic x = Dyadic::parse(text);
        const auto est = eval_finfty(x, tol, n_max);
        os << "x=" << x.str() << " lower=" << est.lower.str() << " upper=" << est.upper.str()
           << " width=" << est.width().str() << " level=" << est.level_reached << " status="
           << (est.status == EnclosureStatus::converged ? "converged" : "level-cap") << '\n';
      }
    });
    return kOk;
  }
  if (!cfg.n) throw UsageError("eval requires --n (or --limit)");
  const int n = require_positive(cfg.n, 1, "--n");
  const auto row = coefficient_row(n, CoefficientMethod::from_recurrence);
  const auto cells = build_options(cfg).max_cells;
  auto covering = [&](const Dyadic& reach) {
    const BigInt last = max(reach, Dyadic(0)).floor_scaled(static_cast<std::uint64_t>(n - 1)) + 1;
    if (last >= cells) throw ResourceError("evaluation range exceeds the memory budget");
    return Approximant::from_coefficients(row, static_cast<std::uint64_t>(last), cells);
  };
  if (!cfg.interval.empty()) {
    const auto [a, b] = parse_interval(cfg.interval);
    const Approximant f = covering(b);
    const auto samples = sample_fn(f, a, b);
    emit(cfg, out, [&](std::ostream& os) { write_samples_csv(os, samples); });
    return kOk;
  }
  if (cfg.xs.empty()) throw UsageError("eval requires --x or --interval");
  std::vector<Dyadic> xs;
  Dyadic reach(0);
  for (const auto& text : cfg.xs) {
    xs.push_back(Dyadic::parse(text));
    reach = max(reach, xs.back());
  }
  const Approximant f = covering(reach);
  emit(cfg, out, [&](std::ostream& os) {
    for (const auto& x : xs) os << f(x).str() << '\n';
  });
  return kOk;
}

VerificationReport suite_lemma1(const RunConfig& cfg) {
  const int n = require_positive(cfg.n, 8, "--n");
  const std::uint64_t blocks = cfg.k_max.value_or(32);
  if (blocks == 0) throw UsageError("--k-max must be positive");
  const std::uint64_t width = std::uint64_t{1} << n;
  const auto table = thue_morse_table(cfg, width * blocks - 1, static_cast<std::uint64_t>(n));
  auto report = verify_lemma1(table, coefficient_row(n, CoefficientMethod::from_recurrence));
  report.merge(recurrence_report(table));
  return report;
}

VerificationReport suite_bounds(const RunConfig& cfg) {
  const int n = require_positive(cfg.n, 12, "--n");
  const auto table = thue_morse_table(cfg, (std::uint64_t{1} << (n + 1)) - 1,
                                      static_cast<std::uint64_t>(n + 1));
  const auto row = coefficient_row_from_table(table, n);
  const auto next = coefficient_row_from_table(table, n + 1);
  auto report = check_bounds_and_symmetry(row, next);
  const auto reference = coefficient_rows(n + 1);
  report.check(row == reference[static_cast<std::size_t>(n - 1)], "table-vs-recurrence row n",
               "equal", "differs");
  report.check(next == reference.back(), "table-vs-recurrence row n+1", "equal", "differs");
  report.merge(recurrence_report(table));
  return report;
}

VerificationReport suite_growth(const RunConfig& cfg) {
  const int n = require_positive(cfg.n, 14, "--n");
  if (n < 3) throw UsageError("growth suite needs --n >= 3");
  const auto table =
      thue_morse_table(cfg, (std::uint64_t{1} << n) - 1, static_cast<std::uint64_t>(n));
  auto report = check_growth(coefficient_row_from_table(table, n - 1),
                             coefficient_row_from_table(table, n));
  report.merge(recurrence_report(table));
  return report;
}

VerificationReport suite_lemma5(const RunConfig& cfg) {
  const int n = require_positive(cfg.n, 6, "--n");
  const int m_max = cfg.m_max.value_or(16);
  if (m_max < 0) throw UsageError("--m-max must be >= 0");
  const auto blocks = static_cast<std::uint64_t>(m_max + 1);
  const std::uint64_t fine = (std::uint64_t{1} << (n + 1)) * blocks;
  const auto table = thue_morse_table(cfg, fine, static_cast<std::uint64_t>(n + 1));
  auto column = [&](int depth, std::uint64_t count) {
    const auto row = table.row(static_cast<std::uint64_t>(depth));
    return std::vector<BigInt>(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(count));
  };
  const Approximant f(n, column(n, (std::uint64_t{1} << n) * blocks + 1));
  const Approximant g(n + 1, column(n + 1, fine + 1));
  auto report = lemma5_suite(f, g, m_max);
  report.merge(recurrence_report(table));
  return report;
}

VerificationReport suite_theorem(const RunConfig& cfg) {
  const int n = require_positive(cfg.n, 8, "--n");
  const int m_max = cfg.m_max.value_or(16);
  if (m_max < 0) throw UsageError("--m-max must be >= 0");
  const std::uint64_t last = (std::uint64_t{1} << n) * static_cast<std::uint64_t>(m_max + 1);
  const auto table = thue_morse_table(cfg, last, static_cast<std::uint64_t>(n));
  const auto row = table.row(static_cast<std::uint64_t>(n));
  auto report = theorem_value_suite(Approximant(n, {row.begin(), row.end()}), m_max);
  report.merge(recurrence_report(table));
  return report;
}

VerificationReport suite_operator(const RunConfig& cfg) {
  const int depth = require_positive(cfg.n, 12, "--n");
  const std::uint64_t iterations = cfg.k_max.value_or(256);
  const auto table = thue_morse_table(cfg, iterations, static_cast<std::uint64_t>(depth));
  const auto orbit = iterate_T(iterations, static_cast<std::size_t>(depth));
  VerificationReport report("operator");
  for (std::uint64_t k = 0; k <= iterations; ++k) {
    for (int n = 1; n <= depth; ++n) {
      const Rational expected =
          -Dyadic(table.at(k, static_cast<std::uint64_t>(n)), node_exponent(n)).to_rational();
      const Rational& actual = orbit[k].coords[static_cast<std::size_t>(n - 1)];
      report.check(actual == expected,
                   "y^" + std::to_string(k) + "_" + std::to_string(n), to_string(expected),
                   to_string(actual));
    }
  }
  report.merge(recurrence_report(table));
  return report;
}

const std::vector<std::string>& default_residual_points() {
  static const std::vector<std::string> points{"1/2", "1", "3/2", "7/4", "3", "2", "4"};
  return points;
}

VerificationReport suite_residual(const RunConfig& cfg, std::ostream& out) {
  const auto levels = parse_levels(cfg.levels.empty() ? "4:12" : cfg.levels);
  std::vector<Dyadic> xs;
  for (const auto& text : cfg.xs.empty() ? default_residual_points() : cfg.xs) {
    xs.push_back(Dyadic::parse(text));
  }
  const auto [lo, hi] = std::minmax_element(levels.begin(), levels.end());
  const auto rows = residual_scan(*lo, *hi, xs);
  if (!cfg.out.empty()) {
    std::vector<ResidualRecord> records;
    for (const auto& r : rows) records.push_back(r.record);
    emit(cfg, out, [&](std::ostream& os) { write_residual_csv(os, records); });
  }

  VerificationReport report("residual");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Dyadic& X = xs[i];
    const bool even_integer = X.is_integer() && (X.mantissa() & 1) == 0;
    std::optional<Dyadic> previous;
    for (std::size_t j = i; j < rows.size(); j += xs.size()) {
      const auto& r = rows[j].record;
      if (even_integer) {
        report.check(r.residual.is_zero(), "zero n=" + std::to_string(r.n) + " X=" + X.str(),
                     "0", r.residual.str());
      }
      if (previous && r.n >= 5) {
        report.check(abs(r.residual) <= *previous,
                     "nonincreasing n=" + std::to_string(r.n) + " X=" + X.str(),
                     "<=" + previous->str(), abs(r.residual).str());
      }
      previous = abs(r.residual);
      report.note("n=" + std::to_string(r.n) + " X=" + X.str() + " residual=" +
                  r.residual.str() + " doubled=" + rows[j].doubled_form.str());
    }
  }
  return report;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerificationReport report("none");
  if (cfg.suite == "lemma1") {
    report = suite_lemma1(cfg);
  } else if (cfg.suite == "bounds") {
    report = suite_bounds(cfg);
  } else if (cfg.suite == "growth") {
    report = suite_growth(cfg);
  } else if (cfg.suite == "lemma5") {
    report = suite_lemma5(cfg);
  } else if (cfg.suite == "theorem") {
    report = suite_theorem(cfg);
  } else if (cfg.suite == "residual") {
    report = suite_residual(cfg, out);
  } else if (cfg.suite == "operator") {
    report = suite_operator(cfg);
  } else {
    throw UsageError("unknown suite '" + cfg.suite + "'");
  }
  report.write(out);
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_sturmian(const RunConfig& cfg, std::ostream& out) {
  if (cfg.alpha.empty()) throw UsageError("sturmian requires --alpha p/q");
  const Rational alpha = parse_rational(cfg.alpha);
  const int depth = cfg.n.value_or(2);
  if (depth < 0) throw UsageError("--n must be >= 0");
  const std::uint64_t k_max = cfg.k_max.value_or(10000);
  const auto probe = boundedness_probe(sturmian_init(alpha), static_cast<std::uint64_t>(depth),
                                       k_max, build_options(cfg));
  emit(cfg, out, [&](std::ostream& os) {
    os << "k,running_max\n";
    for (const auto& p : probe) os << p.k << ',' << to_string(p.running_max) << '\n';
  });
  return kOk;
}

int cmd_plot(const RunConfig& cfg, std::ostream& out) {
  const auto levels = parse_levels(cfg.levels.empty() ? "4,6,12" : cfg.levels);
  const auto [a, b] = parse_interval(cfg.interval.empty() ? "0:8" : cfg.interval);
  const auto cells = build_options(cfg).max_cells;
  std::vector<Polyline> lines;
  for (int n : levels) {
    const BigInt last = max(b, Dyadic(0)).floor_scaled(static_cast<std::uint64_t>(n - 1)) + 1;
    if (last >= cells) throw ResourceError("plot range exceeds the memory budget");
    const auto f = Approximant::from_coefficients(
        coefficient_row(n, CoefficientMethod::from_recurrence), static_cast<std::uint64_t>(last),
        cells);
    lines.push_back({"f_" + std::to_string(n), sample_fn(f, a, b)});
  }
  emit(cfg, out, [&](std::ostream& os) { write_svg(os, lines); });
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Thue-Morse Pascal triangle and the f_n approximants", "thue"};
  app.require_subcommand(1);
  app.add_option("--out", cfg.out, "Output file (default: stdout)");
  app.add_option("--cache-dir", cfg.cache_dir, "Triangle row cache (fallback: $TMP_CACHE_DIR)");
  app.add_option("--mem-budget-mb", cfg.mem_budget_mb, "Memory budget in MiB");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output file (default: stdout)");
    sub->add_option("--cache-dir", cfg.cache_dir, "Triangle row cache");
    sub->add_option("--mem-budget-mb", cfg.mem_budget_mb, "Memory budget in MiB");
  };

  auto* triangle = app.add_subcommand("triangle", "Emit a window of Sigma^k_n as CSV");
  triangle->add_option("--n", cfg.n, "Max depth N");
  triangle->add_option("--k-max", cfg.k_max, "Max column K");
  triangle->add_option("--alpha", cfg.alpha, "Use w(alpha) on column 0 (p/q)");
  common(triangle);

  auto* coeffs = app.add_subcommand("coeffs", "Print the coefficient row a(n, .)");
  coeffs->add_option("--n", cfg.n, "Level n");
  coeffs->add_option("--method", cfg.method, "table | recurrence");
  common(coeffs);

  auto* eval = app.add_subcommand("eval", "Evaluate f_n, or enclose f_inf with --limit");
  eval->add_option("--n", cfg.n, "Level n (level cap with --limit)");
  eval->add_option("--x", cfg.xs, "Dyadic points p/q or p/2^e");
  eval->add_option("--interval", cfg.interval, "Sample f_n at nodes of a:b as CSV");
  eval->add_flag("--limit", cfg.limit, "Enclose f_inf(x)");
  eval->add_option("--tol", cfg.tol, "Target width for --limit");
  common(eval);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", cfg.suite, "lemma1|bounds|growth|lemma5|theorem|residual|operator")
      ->required();
  verify->add_option("--n", cfg.n, "Level / depth");
  verify->add_option("--k-max", cfg.k_max, "Blocks (lemma1) or iterations (operator)");
  verify->add_option("--m-max", cfg.m_max, "Number of antiperiods checked");
  verify->add_option("--levels", cfg.levels, "Levels a:b or a,b,c (residual)");
  verify->add_option("--x", cfg.xs, "Residual points");
  common(verify);

  auto* sturmian = app.add_subcommand("sturmian", "Boundedness probe under w(alpha)");
  sturmian->add_option("--alpha", cfg.alpha, "Rational alpha p/q in [0,1]");
  sturmian->add_option("--n", cfg.n, "Depth probed (default 2)");
  sturmian->add_option("--k-max", cfg.k_max, "Columns probed");
  common(sturmian);

  auto* plot = app.add_subcommand("plot", "SVG polylines of f_n");
  plot->add_option("--levels", cfg.levels, "Levels a,b,c or a:b");
  plot->add_option("--interval", cfg.interval, "Interval a:b");
  common(plot);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*triangle) return cmd_triangle(cfg, out);
    if (*coeffs) return cmd_coeffs(cfg, out);
    if (*eval) return cmd_eval(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*sturmian) return cmd_sturmian(cfg, out);
    if (*plot) return cmd_plot(cfg, out);
  } catch (const ResourceError& e) {
    err << "resource budget exhausted: " << e.what() << '\n';
    return kResourceExhausted;
  } catch (const std::bad_alloc&) {
    err << "resource budget exhausted: out of memory\n";
    return kResourceExhausted;
  } catch (const CacheCorruption& e) {
    err << "verification failed: " << e.what() << '\n';
    out << "FAIL\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace thue::cli
