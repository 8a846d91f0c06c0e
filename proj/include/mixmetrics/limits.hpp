#pragma once

#include <cstdint>

namespace mixmetrics {

// Default size budgets. Enumerations check the predicted size against the
// budget before allocating anything and throw SizeBudgetExceeded when the
// prediction is too large, so a caller never pays for an enumeration it
// cannot afford. All budgets are overridable per call.

// Monomial terms a symmetric-polynomial operation may produce.
inline constexpr std::uint64_t kDefaultTermBudget = 1'000'000;

// Contingency tables a class enumeration may produce.
inline constexpr std::uint64_t kDefaultTableBudget = 1'000'000;

// Partitions (or partition pairs) a generator may produce.
inline constexpr std::uint64_t kDefaultPartitionBudget = 1'000'000;

// Largest round size the brute-force assignment counter accepts.
inline constexpr int kDefaultBruteForceLimit = 10;

// Largest round size the permutation-bucketing class oracle accepts.
inline constexpr int kDefaultClassOracleLimit = 8;

// Largest matrix the exact permanent accepts (cost is 2^n).
inline constexpr int kDefaultPermanentLimit = 20;

}  // namespace mixmetrics
