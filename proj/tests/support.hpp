#pragma once

// Naive reference implementations used only by tests. None of these share
// code with the library paths they check.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "polystrip/instance.hpp"
#include "polystrip/rng.hpp"

namespace polystrip::testing {

inline PermutationInstance linear(std::vector<Permutation> perms) {
  const std::size_t n = perms.front().size();
  return PermutationInstance(n, false, std::move(perms));
}

inline PermutationInstance circular(std::vector<Permutation> perms) {
  const std::size_t n = perms.front().size();
  return PermutationInstance(n, true, std::move(perms));
}

// Every window of exactly p items, checked with a std::set.
inline bool naive_windows_ok(const PermutationInstance& inst, const Coloring& col, std::size_t p) {
  const std::size_t n = inst.n();
  if (p > n) return true;
  const std::size_t starts = inst.circular() ? n : n - p + 1;
  for (const auto& perm : inst.perms()) {
    for (std::size_t s = 0; s < starts; ++s) {
      std::set<Color> seen;
      for (std::size_t i = 0; i < p; ++i) seen.insert(col[perm[(s + i) % n]]);
      if (seen.size() < col.k) return false;
    }
  }
  return true;
}

// Smallest p at which naive_windows_ok holds (n + 1 if none up to n).
inline std::size_t naive_min_window(const PermutationInstance& inst, const Coloring& col) {
  for (std::size_t p = 1; p <= inst.n(); ++p) {
    if (naive_windows_ok(inst, col, p)) return p;
  }
  return inst.n() + 1;
}

// Calls f on every coloring in {0..k-1}^n in lexicographic order (item 0
// most significant); stops early when f returns false.
inline void for_each_coloring(std::size_t n, std::size_t k,
                              const std::function<bool(const Coloring&)>& f) {
  std::vector<Color> colors(n, 0);
  while (true) {
    if (!f(Coloring(static_cast<Color>(k), colors))) return;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++colors[i] < k) break;
      colors[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

inline Coloring random_coloring(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<Color> colors(n);
  for (auto& c : colors) c = static_cast<Color>(rng.below(k));
  return Coloring(static_cast<Color>(k), std::move(colors));
}

}  // namespace polystrip::testing
