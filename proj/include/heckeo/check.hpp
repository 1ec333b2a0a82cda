#pragma once

#include <string>
#include <vector>

namespace heckeo {

/// Outcome of one named verification.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Accumulates case outcomes for one check and renders a short detail line
/// ("24 cases" or "2/24 failed; first: ...").
class CheckTally {
 public:
  explicit CheckTally(std::string name) : name_(std::move(name)) {}

  bool expect(bool ok, const std::string& what) {
    ++cases_;
    if (!ok) {
      ++failed_;
      if (failures_.size() < 3) failures_.push_back(what);
    }
    return ok;
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }

  bool ok() const { return failed_ == 0; }
  CheckResult result() const;

 private:
  std::string name_;
  std::size_t cases_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

inline CheckResult CheckTally::result() const {
  CheckResult r{name_, failed_ == 0, {}};
  if (failed_ == 0) {
    r.detail = std::to_string(cases_) + (cases_ == 1 ? " case" : " cases");
  } else {
    r.detail = std::to_string(failed_) + "/" + std::to_string(cases_) + " failed; first: ";
    for (std::size_t k = 0; k < failures_.size(); ++k) r.detail += (k ? "; " : "") + failures_[k];
  }
  for (const auto& n : notes_) r.detail += "; " + n;
  return r;
}

}  // namespace heckeo
