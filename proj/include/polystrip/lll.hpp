#pragma once

#include <cstddef>
#include <cstdint>

#include "polystrip/instance.hpp"

namespace polystrip {

struct LLLParams {
  std::size_t k = 2;
  std::size_t d = 2;
  std::size_t t = 1;
  std::uint64_t seed = 0;
  std::size_t max_rounds = 1'000'000;

  void validate() const;
};

// e * ((d-1) t^2 + 2t - 1) * k (1 - 1/k)^t < 1, evaluated as written.
bool condition_holds(std::size_t k, std::size_t d, std::size_t t);

// Left-hand side of the inequality above.
double condition_value(std::size_t k, std::size_t d, std::size_t t);

struct WindowBound {
  std::size_t t_formula = 1;  // max(1, ceil(k (4 ln k + ln d)))
  std::size_t t_min = 1;      // first t >= 1 with condition_holds
};

WindowBound window_bound(std::size_t k, std::size_t d);

struct ResampleResult {
  Coloring coloring;
  std::size_t resamples = 0;
};

// Starts from a uniform random k-coloring and, while some t-window misses a
// color, re-draws every item of the lowest (ordering, offset) such window.
// Throws BudgetExceeded after params.max_rounds resamples.
ResampleResult color_resample(const PermutationInstance& inst, const LLLParams& params);

// Number of other t-windows sharing an item with the window at (perm, start).
std::size_t window_dependency_count(const PermutationInstance& inst, std::size_t t,
                                    std::size_t perm, std::size_t start);

}  // namespace polystrip
