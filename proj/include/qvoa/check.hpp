#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace qvoa {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::optional<std::string> witness;  // first counterexample, in deterministic sweep order

  bool passed() const { return !witness.has_value(); }
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
  }
  const CheckResult* first_failure() const {
    for (const auto& c : checks) {
      if (!c.passed()) return &c;
    }
    return nullptr;
  }
  void append(const VerificationReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

// Keeps the failure with the smallest task index so parallel sweeps report the same
// witness as a sequential one.
class FirstFailure {
 public:
  void record(std::size_t index, std::string message) {
    std::lock_guard lock(mutex_);
    if (index < index_) {
      index_ = index;
      message_ = std::move(message);
    }
  }
  std::optional<std::string> message() const {
    std::lock_guard lock(mutex_);
    return message_;
  }

 private:
  mutable std::mutex mutex_;
  std::size_t index_ = std::numeric_limits<std::size_t>::max();
  std::optional<std::string> message_;
};

// Runs fn(state, index) for index in [0, count) on `jobs` threads. Each worker owns one
// state built by make_state(); states are never shared.
template <class MakeState, class Fn>
void parallel_for(std::size_t count, int jobs, MakeState make_state, Fn fn) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    auto state = make_state();
    for (std::size_t k = 0; k < count; ++k) fn(state, k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      auto state = make_state();
      for (std::size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) fn(state, k);
    });
  }
}

}  // namespace qvoa
