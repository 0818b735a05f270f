#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "rank2cc/errors.hpp"

namespace rank2cc {

/// Wall-clock budget polled from long-running loops.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(Clock::time_point at) : at_(at) {}
  static Deadline after(std::chrono::milliseconds d) { return Deadline(Clock::now() + d); }

  bool expired() const { return at_ && Clock::now() >= *at_; }

  void check() const {
    if (expired()) throw BudgetExceeded("time budget exhausted");
  }

  /// Cheap variant for inner loops: reads the clock every 1024 calls.
  void poll(std::uint64_t& counter) const {
    if (at_ && (++counter & 1023U) == 0) check();
  }

 private:
  std::optional<Clock::time_point> at_;
};

}  // namespace rank2cc
