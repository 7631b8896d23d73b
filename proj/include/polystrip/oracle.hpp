#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "polystrip/hardness.hpp"
#include "polystrip/instance.hpp"

namespace polystrip {

// Search node limit shared by the exhaustive oracles.
struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
};

// Lexicographically smallest coloring (item 0 most significant) whose
// p-windows are all polychromatic, or nullopt when none exists.
std::optional<Coloring> exhaustive_best_coloring(const PermutationInstance& inst, std::size_t k,
                                                 std::size_t p, SearchBudget budget = {});

// Whether any k-coloring makes every p-window polychromatic. Colors are
// introduced in order (item i may use at most one color beyond those already
// used), which removes color-permutation symmetry.
bool exists_valid_coloring(const PermutationInstance& inst, std::size_t k, std::size_t p,
                           SearchBudget budget = {});

// Least window size achievable by any k-coloring.
std::size_t min_achievable_window(const PermutationInstance& inst, std::size_t k,
                                  SearchBudget budget = {});

// Complete backtracking over items in first-ordering position order, color 0
// first, forcing the third item of any triple whose other two agree. Returns a
// 2-coloring with no monochromatic consecutive triple, or nullopt.
std::optional<Coloring> solve_triples(const PermutationInstance& inst, SearchBudget budget = {});

// First NAE assignment in lexicographic order (variable 0 most significant,
// false before true), or nullopt.
std::optional<Assignment> nae_brute_force(const NAEFormula& f, SearchBudget budget = {});

}  // namespace polystrip
