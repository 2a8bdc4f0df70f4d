#pragma once

#include <cstdlib>
#include <string>

#include "fpt/error.hpp"
#include "fpt/nt.hpp"

namespace fpt {

/// Upper bound on the number of objects an enumerating operation may touch.
struct Budget {
  static constexpr u64 kDefaultLimit = u64{1} << 20;
  u64 limit = kDefaultLimit;

  /// Default budget, overridden by the FPT_BUDGET environment variable.
  static Budget from_env() {
    Budget b;
    if (const char* env = std::getenv("FPT_BUDGET"); env != nullptr && *env != '\0') {
      b.limit = std::stoull(env);
    }
    return b;
  }

  void check(const BigInt& needed, const std::string& what) const {
    if (needed > limit) {
      fail(Errc::BudgetExceeded, what + " needs " + needed.str() + " > budget " + std::to_string(limit));
    }
  }
};

}  // namespace fpt
