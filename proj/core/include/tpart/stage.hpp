#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tpart {

/// Why a Las Vegas stage gave up: what it needed, what the best round
/// achieved, and how many rounds were spent.
struct StageFailure {
  std::string stage;
  long long needed = 0;
  long long achieved = 0;
  int rounds = 0;
  std::string detail;
};

struct StageLogEntry {
  std::string stage;
  int round = 0;
  std::string status;  // "ok" | "retry" | "fail" | info
  std::string detail;
};

using StageLog = std::vector<StageLogEntry>;

template <class T>
struct StageResult {
  std::optional<T> value;
  StageFailure failure;

  bool ok() const { return value.has_value(); }

  static StageResult success(T v) {
    StageResult r;
    r.value = std::move(v);
    return r;
  }
  static StageResult fail(StageFailure f) {
    StageResult r;
    r.failure = std::move(f);
    return r;
  }
};

}  // namespace tpart
