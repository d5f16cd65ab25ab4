#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace pbraid {

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what, bool timed_out = false)
      : std::runtime_error(what), timed_out_(timed_out) {}
  bool timed_out() const { return timed_out_; }

 private:
  bool timed_out_;
};

// Cap on cycling-type operations plus an optional wall-clock deadline.
struct Budget {
  long max_operations = -1;  // negative: unlimited
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static Budget unlimited() { return {}; }
  static Budget operations(long ops) { return Budget{ops, std::nullopt}; }
  static Budget millis(long ms) {
    return Budget{-1, std::chrono::steady_clock::now() + std::chrono::milliseconds(ms)};
  }

  void check(long operations_done, const char* what) const {
    if (max_operations >= 0 && operations_done > max_operations) {
      throw BudgetExceeded(std::string(what) + ": operation budget exceeded");
    }
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      throw BudgetExceeded(std::string(what) + ": time budget exceeded", true);
    }
  }
};

}  // namespace pbraid
