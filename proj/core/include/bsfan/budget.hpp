#pragma once

#include <cstddef>

namespace bsfan {

inline constexpr std::size_t kDefaultDivisionSteps = 1'000'000;
inline constexpr std::size_t kDefaultCompletionSteps = 100'000;
inline constexpr std::size_t kDefaultLoweringIterations = 10'000;

/// Step limits shared by division, completion and the order-lowering loops.
/// Exhaustion is always reported (flag or BudgetExhausted), never silent.
struct Budget {
  std::size_t division_steps = kDefaultDivisionSteps;
  std::size_t completion_steps = kDefaultCompletionSteps;
  std::size_t lowering_iterations = kDefaultLoweringIterations;
};

}  // namespace bsfan
