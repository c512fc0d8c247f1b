#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace thue {

struct Failure {
  std::string id;
  std::string expected;
  std::string actual;
};

// Outcome of one verification suite. Failures are kept in case order, capped
// at `max_recorded` entries; `failure_count` is always exact.
class VerificationReport {
 public:
  explicit VerificationReport(std::string suite, std::size_t max_recorded = 64);

  void pass() { ++cases_; }
  void fail(std::string id, std::string expected, std::string actual);
  // Records one case: pass when `ok`, otherwise a failure.
  void check(bool ok, std::string id, std::string expected, std::string actual);
  // Informational line carried in the text output; does not affect status.
  void note(std::string line) { notes_.push_back(std::move(line)); }
  void merge(const VerificationReport& other);

  const std::string& suite() const { return suite_; }
  std::size_t cases() const { return cases_; }
  std::size_t failure_count() const { return failure_count_; }
  const std::vector<Failure>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }
  bool passed() const { return failure_count_ == 0; }

  // Line-oriented text; the last token is PASS or FAIL.
  void write(std::ostream& os) const;

 private:
  std::string suite_;
  std::size_t max_recorded_;
  std::size_t cases_ = 0;
  std::size_t failure_count_ = 0;
  std::vector<Failure> failures_;
  std::vector<std::string> notes_;
};

}  // namespace thue
