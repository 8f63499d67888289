#pragma once

#include <cstddef>

namespace brickwork {

/// Limits for the exponential searches. Exceeding one raises BudgetExceeded.
struct Budget {
  /// Largest vertex count for which solidity (and robust cuts) are computed.
  int solid_max_n = 12;
  /// Maximum number of perfect matchings an enumeration may produce.
  std::size_t pm_cap = 2'000'000;
  /// Step budget of the Kuratowski subdivision search.
  std::size_t witness_steps = 20'000'000;

  /// Defaults overridden by BRICKWORK_SOLID_MAX_N, BRICKWORK_PM_CAP and
  /// BRICKWORK_WITNESS_STEPS when set.
  static Budget from_env();
};

}  // namespace brickwork
