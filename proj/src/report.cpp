#include "thue/report.hpp"

namespace thue {

VerificationReport::VerificationReport(std::string suite, std::size_t max_recorded)
    : suite_(std::move(suite)), max_recorded_(max_recorded) {}

void VerificationReport::fail(std::string id, std::string expected, std::string actual) {
  ++cases_;
  ++failure_count_;
  if (failures_.size() < max_recorded_) {
    failures_.push_back({std::move(id), std::move(expected), std::move(actual)});
  }
}

void VerificationReport::check(bool ok, std::string id, std::string expected,
                               std::string actual) {
  if (ok) {
    pass();
  } else {
    fail(std::move(id), std::move(expected), std::move(actual));
  }
}

void VerificationReport::merge(const VerificationReport& other) {
  cases_ += other.cases_;
  failure_count_ += other.failure_count_;
  for (const auto& f : other.failures_) {
    if (failures_.size() >= max_recorded_) break;
    failures_.push_back(f);
  }
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

void VerificationReport::write(std::ostream& os) const {
  os << "suite " << suite_ << "\n";
  os << "cases " << cases_ << "\n";
  os << "failures " << failure_count_ << "\n";
  for (const auto& n : notes_) os << "note " << n << "\n";
  for (const auto& f : failures_) {
    os << "fail " << f.id << " expected=" << f.expected << " actual=" << f.actual << "\n";
  }
  if (failures_.size() < failure_count_) {
    os << "fail ... " << (failure_count_ - failures_.size()) << " more\n";
  }
  os << (passed() ? "PASS" : "FAIL") << "\n";
}

}  // namespace thue
