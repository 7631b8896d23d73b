#include "polystrip/lll.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "polystrip/rng.hpp"

namespace polystrip {

void LLLParams::validate() const {
  if (k == 0 || d == 0 || t == 0 || max_rounds == 0) {
    throw std::invalid_argument("LLL parameters need k, d, t, max_rounds >= 1");
  }
}

double condition_value(std::size_t k, std::size_t d, std::size_t t) {
  const double kd = static_cast<double>(k);
  const double td = static_cast<double>(t);
  const double deps = static_cast<double>(d - 1) * td * td + 2.0 * td - 1.0;
  return std::numbers::e * deps * kd * std::pow(1.0 - 1.0 / kd, td);
}

bool condition_holds(std::size_t k, std::size_t d, std::size_t t) {
  if (k == 0 || d == 0 || t == 0) throw std::invalid_argument("condition needs k, d, t >= 1");
  return condition_value(k, d, t) < 1.0;
}

WindowBound window_bound(std::size_t k, std::size_t d) {
  if (k == 0 || d == 0) throw std::invalid_argument("window bound needs k, d >= 1");
  const double kd = static_cast<double>(k);
  const double formula = kd * (4.0 * std::log(kd) + std::log(static_cast<double>(d)));
  WindowBound wb;
  wb.t_formula = static_cast<std::size_t>(std::max(1.0, std::ceil(formula)));
  wb.t_min = 1;
  while (!condition_holds(k, d, wb.t_min)) ++wb.t_min;
  return wb;
}

namespace {

struct Window {
  std::size_t perm;
  std::size_t start;
};

std::optional<Window> first_violation(const PermutationInstance& inst,
                                      const std::vector<Color>& colors, std::size_t k,
                                      std::size_t t, std::vector<std::size_t>& count) {
  const std::size_t n = inst.n();
  const std::size_t starts = inst.circular() ? n : n - t + 1;
  for (std::size_t pi = 0; pi < inst.d(); ++pi) {
    const auto& perm = inst.perm(pi);
    std::fill(count.begin(), count.end(), 0);
    std::size_t distinct = 0;
    for (std::size_t pos = 0; pos < t; ++pos) {
      if (count[colors[perm[pos]]]++ == 0) ++distinct;
    }
    for (std::size_t start = 0; start < starts; ++start) {
      if (start > 0) {
        if (--count[colors[perm[start - 1]]] == 0) --distinct;
        if (count[colors[perm[(start + t - 1) % n]]]++ == 0) ++distinct;
      }
      if (distinct < k) return Window{pi, start};
    }
  }
  return std::nullopt;
}

}  // namespace

ResampleResult color_resample(const PermutationInstance& inst, const LLLParams& params) {
  params.validate();
  if (params.d != inst.d()) {
    throw std::invalid_argument("LLL parameter d does not match the instance");
  }
  const std::size_t n = inst.n();
  const std::size_t t = params.t;
  if (inst.circular() && t > n) {
    throw std::invalid_argument("circular window size must not exceed the item count");
  }

  Rng rng(params.seed);
  std::vector<Color> colors(n);
  for (auto& c : colors) c = static_cast<Color>(rng.below(params.k));

  ResampleResult result;
  if (t <= n) {
    std::vector<std::size_t> count(params.k);
    while (auto bad = first_violation(inst, colors, params.k, t, count)) {
      if (result.resamples == params.max_rounds) {
        throw BudgetExceeded("resampling budget of " + std::to_string(params.max_rounds) +
                             " exhausted at t=" + std::to_string(t));
      }
      const auto& perm = inst.perm(bad->perm);
      for (std::size_t i = 0; i < t; ++i) {
        colors[perm[(bad->start + i) % n]] = static_cast<Color>(rng.below(params.k));
      }
      ++result.resamples;
    }
  }
  result.coloring = Coloring(static_cast<Color>(params.k), std::move(colors));
  if (!verify_windows(inst, result.coloring, t).valid) {
    throw std::logic_error("resampled coloring failed verification");
  }
  return result;
}

std::size_t window_dependency_count(const PermutationInstance& inst, std::size_t t,
                                    std::size_t perm, std::size_t start) {
  const std::size_t n = inst.n();
  if (t == 0 || t > n) throw std::invalid_argument("window size must lie in 1..n");
  std::vector<char> inside(n, 0);
  for (std::size_t i = 0; i < t; ++i) inside[inst.perm(perm)[(start + i) % n]] = 1;

  const std::size_t starts = inst.circular() ? n : n - t + 1;
  std::size_t count = 0;
  for (std::size_t pi = 0; pi < inst.d(); ++pi) {
    for (std::size_t s = 0; s < starts; ++s) {
      if (pi == perm && s == start) continue;
      for (std::size_t i = 0; i < t; ++i) {
        if (inside[inst.perm(pi)[(s + i) % n]]) {
          ++count;
          break;
        }
      }
    }
  }
  return count;
}

}  // namespace polystrip
