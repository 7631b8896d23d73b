#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polystrip/geometry.hpp"
#include "polystrip/instance.hpp"

namespace polystrip {

// h Hamiltonian paths of K_{2h}, pairwise edge-disjoint and jointly covering
// every edge.
struct HamPathDecomposition {
  std::size_t h = 1;
  std::vector<std::vector<std::size_t>> paths;
};

HamPathDecomposition ham_path_decomposition(std::size_t h);

// True iff `dec` satisfies the decomposition invariants.
bool is_valid_decomposition(const HamPathDecomposition& dec);

// A witness point of the dual construction, covered by exactly the strips of
// clusters `a` and `b`.
struct DualWitness {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<double> point;
};

struct LowerBoundInstance {
  std::size_t k = 2;
  std::size_t d = 1;
  std::size_t cluster = 1;         // s (primal) or t (dual)
  std::size_t claimed_bound = 3;   // 2 * cluster + 1
  std::vector<std::vector<std::size_t>> clusters;  // item ids or strip ids
  // Exactly one of the two forms is populated.
  std::optional<PermutationInstance> primal;
  std::optional<StripSet> dual;
  std::vector<DualWitness> witnesses;

  bool is_primal() const { return primal.has_value(); }
};

// 2d clusters of s items, one per vertex of K_{2d}; ordering i lists the
// clusters along the i-th Hamiltonian path, each cluster in ascending id.
// Throws std::invalid_argument when s = 0.
LowerBoundInstance primal_lower_bound(std::size_t k, std::size_t d);

// 2d groups of t strips, A_{2i} = [0,2] and A_{2i+1} = [1,3] on axis i, plus
// a witness point for every pair of groups. Throws when t = 0.
LowerBoundInstance dual_lower_bound(std::size_t k, std::size_t d);

// Appends `extra` fresh items at the tail of every ordering (primal) or
// `extra` pairwise disjoint strips beyond the construction (dual).
LowerBoundInstance enlarge_instance(const LowerBoundInstance& lb, std::size_t extra);

}  // namespace polystrip
