#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace rank2cc {

enum class Status { Pass, Fail, Inconclusive };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

struct CheckItem {
  std::string label;
  Status status = Status::Pass;
  std::string detail;
};

/// Result of a verification sweep. Failures are data; the first failing item
/// is kept as the witness.
struct CheckReport {
  std::string check;
  std::string scope;
  std::vector<CheckItem> items;
  std::optional<std::string> witness;

  void add(std::string label, Status status, std::string detail = {}) {
    if (status == Status::Fail && !witness) witness = label + (detail.empty() ? "" : ": " + detail);
    items.push_back({std::move(label), status, std::move(detail)});
  }

  void merge(const CheckReport& other) {
    for (const auto& it : other.items) add(it.label, it.status, it.detail);
  }

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(items.begin(), items.end(), [s](const auto& i) { return i.status == s; }));
  }

  Status status() const {
    if (count(Status::Fail) > 0) return Status::Fail;
    if (count(Status::Inconclusive) > 0) return Status::Inconclusive;
    return Status::Pass;
  }

  bool passed() const { return status() == Status::Pass; }

  std::string to_string() const {
    std::ostringstream os;
    for (const auto& it : items) {
      os << status_name(it.status) << ' ' << it.label;
      if (!it.detail.empty()) os << "  (" << it.detail << ')';
      os << '\n';
    }
    os << check;
    if (!scope.empty()) os << " [" << scope << ']';
    os << ": " << status_name(status()) << " (" << count(Status::Pass) << " passed, "
       << count(Status::Fail) << " failed, " << count(Status::Inconclusive) << " inconclusive)\n";
    if (witness) os << "witness: " << *witness << '\n';
    return os.str();
  }
};

}  // namespace rank2cc
