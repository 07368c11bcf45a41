#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace ekrlab {

/// Raised when a search exceeds its node or wall-clock allowance.
class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Node and wall-clock allowance for exponential searches. Copies share
/// nothing; each search owns its counter.
class Budget {
 public:
  using clock = std::chrono::steady_clock;

  Budget() = default;
  Budget(std::uint64_t node_limit, std::optional<std::chrono::milliseconds> time_limit)
      : node_limit_(node_limit) {
    if (time_limit) deadline_ = clock::now() + *time_limit;
  }

  static Budget unlimited() { return {}; }

  /// Time budget from EKRLAB_BUDGET_MS when set, else `fallback`.
  static Budget from_env(std::chrono::milliseconds fallback,
                         std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max()) {
    if (const char* env = std::getenv("EKRLAB_BUDGET_MS")) {
      char* end = nullptr;
      const long long ms = std::strtoll(env, &end, 10);
      if (end != env && ms > 0) return Budget(node_limit, std::chrono::milliseconds(ms));
    }
    return Budget(node_limit, fallback);
  }

  void tick(const char* what = "search") {
    if (++nodes_ > node_limit_) throw budget_exceeded(std::string(what) + ": node budget exhausted");
    if (deadline_ && (nodes_ & 0x3ff) == 0 && clock::now() > *deadline_)
      throw budget_exceeded(std::string(what) + ": time budget exhausted");
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t node_limit_ = std::numeric_limits<std::uint64_t>::max();
  std::optional<clock::time_point> deadline_;
  std::uint64_t nodes_ = 0;
};

}  // namespace ekrlab
