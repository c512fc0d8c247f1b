#include "doctest.h"

#include "thue/cli.hpp"
#include "thue/io.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace thue;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    static std::atomic<int> counter{0};
    const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
    path = fs::temp_directory_path() /
           ("thue_cli_" + std::to_string(stamp) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

}  // namespace

TEST_CASE("coeffs") {
  const auto r = run({"coeffs", "--n", "4"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "0,0,0,0,1,3,5,7,8,8,8,8,7,5,3,1\n");
  CHECK(run({"coeffs", "--n", "4", "--method", "table"}).out == r.out);
  CHECK(run({"coeffs", "--n", "0"}).code == cli::kUsageError);
}

TEST_CASE("eval") {
  const auto r = run({"eval", "--n", "4", "--x", "1/2", "--x", "3", "--x", "-1"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "-1/8\n1\n0\n");
  CHECK(run({"eval", "--n", "6", "--x", "1/2^1"}).out == "-11/32\n");
  CHECK(run({"eval", "--n", "4", "--x", "1/3"}).code == cli::kUsageError);

  const auto interval = run({"eval", "--n", "4", "--interval", "0:1"});
  CHECK(interval.code == cli::kOk);
  CHECK(interval.out.find("1/2,-1/8") != std::string::npos);

  const auto limit = run({"eval", "--limit", "--x", "1/2"});
  CHECK(limit.code == cli::kOk);
  CHECK(limit.out.find("lower=-1 ") != std::string::npos);
  CHECK(limit.out.find("status=level-cap") != std::string::npos);
}

TEST_CASE("triangle") {
  const auto r = run({"triangle", "--n", "2", "--k-max", "2"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "k,n,value\n0,0,-1\n0,1,0\n0,2,0\n1,0,1\n1,1,-1\n1,2,0\n2,0,1\n2,1,0\n2,2,-1\n");
  const auto sturm = run({"triangle", "--n", "2", "--k-max", "3", "--alpha", "2/3"});
  CHECK(sturm.code == cli::kOk);
  CHECK(sturm.out.find("\n3,2,1\n") != std::string::npos);
}

TEST_CASE("verify suites") {
  for (const char* suite : {"lemma1", "bounds", "growth", "theorem", "operator"}) {
    const auto r = run({"verify", "--suite", suite});
    CHECK_MESSAGE(r.code == cli::kOk, suite);
    CHECK(ends_with(r.out, "PASS\n"));
  }
  const auto growth = run({"verify", "--suite", "growth", "--n", "5"});
  CHECK(growth.out.find("l=7") != std::string::npos);

  const auto lemma5 = run({"verify", "--suite", "lemma5"});
  CHECK(lemma5.code == cli::kVerificationFailed);
  CHECK(lemma5.out.find("pt5 slope<=1") != std::string::npos);
  CHECK(ends_with(lemma5.out, "FAIL\n"));

  // |residual| at X = 1/2 grows from n = 4 to n = 6
  const auto residual = run({"verify", "--suite", "residual"});
  CHECK(residual.code == cli::kVerificationFailed);
  CHECK(run({"verify", "--suite", "residual", "--x", "1", "--x", "3/2", "--x", "2"}).code ==
        cli::kOk);
}

TEST_CASE("residual CSV goes to --out") {
  TempDir dir;
  const auto file = dir.path / "res.csv";
  const auto r = run({"verify", "--suite", "residual", "--x", "1", "--out", file.string()});
  CHECK(r.code == cli::kOk);
  std::ifstream in(file);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,X,integral,lhs,rhs,residual");
  std::string first;
  std::getline(in, first);
  CHECK(first == "4,1,-5/16,-5/16,-1/8,-3/16");
}

TEST_CASE("plot writes an SVG") {
  TempDir dir;
  const auto file = dir.path / "plot.svg";
  CHECK(run({"plot", "--out", file.string()}).code == cli::kOk);
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("data-label=\"f_12\"") != std::string::npos);
}

TEST_CASE("sturmian probe") {
  const auto r = run({"sturmian", "--alpha", "2/3", "--k-max", "300"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("k,running_max\n", 0) == 0);
  CHECK(ends_with(r.out, "\n300,100\n"));
  CHECK(run({"sturmian", "--alpha", "3/2"}).code == cli::kUsageError);
}

TEST_CASE("usage errors and resource limits") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"verify", "--suite", "nope"}).code == cli::kUsageError);
  CHECK(run({"eval", "--n", "x"}).code == cli::kUsageError);
  CHECK(run({"triangle", "--out", "/nonexistent-dir/x.csv"}).code == cli::kUsageError);
  const auto big = run({"triangle", "--n", "30", "--k-max", "100000000", "--mem-budget-mb", "1"});
  CHECK(big.code == cli::kResourceExhausted);
  CHECK_FALSE(big.err.empty());
}

TEST_CASE("cache: warm output equals cold output; corruption exits 1") {
  TempDir dir;
  const std::vector<std::string> args{"verify", "--suite", "lemma1", "--cache-dir", dir.path.string()};
  const auto cold = run(args);
  REQUIRE(cold.code == cli::kOk);
  REQUIRE_FALSE(fs::is_empty(dir.path));
  const auto warm = run(args);
  CHECK(warm.code == cli::kOk);
  CHECK(warm.out == cold.out);

  const std::vector<std::string> tri{"triangle", "--n", "5", "--k-max", "40", "--cache-dir",
                                     dir.path.string()};
  const auto tri_cold = run(tri);
  CHECK(run(tri).out == tri_cold.out);

  SUBCASE("checksum mismatch") {
    const RowCache cache(dir.path);
    const auto path = cache.path_for("thue_morse", 3);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    in.close();
    std::string text = ss.str();
    const auto last = text.find_last_of("0123456789", text.size() - 2);
    text[last] = text[last] == '1' ? '2' : '1';
    std::ofstream(path, std::ios::trunc) << text;
    const auto r = run(args);
    CHECK(r.code == cli::kVerificationFailed);
    CHECK(r.err.find("checksum") != std::string::npos);
  }
  SUBCASE("consistent checksum, wrong value") {
    const RowCache cache(dir.path);
    auto row = *cache.load("thue_morse", 4, 40);
    row[13] += 2;
    cache.store("thue_morse", 4, row);
    CHECK(run(tri).code == cli::kVerificationFailed);
  }
}
