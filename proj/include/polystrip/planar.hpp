#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polystrip/instance.hpp"

namespace polystrip {

struct TupleEdge {
  std::size_t left = 0;
  std::size_t right = 0;
  Item item = 0;

  friend bool operator==(const TupleEdge&, const TupleEdge&) = default;
};

// Bipartite multigraph whose vertices are the consecutive k-tuples of two
// orderings; item s contributes one edge between the two tuples holding it.
// Edge i is labeled by item i, so edges are indexed by item.
struct TupleMultigraph {
  std::size_t k = 1;
  std::vector<std::vector<Item>> left;
  std::vector<std::vector<Item>> right;
  std::vector<TupleEdge> edges;
};

// Proper edge coloring: color[e] for edge e.
struct EdgeColoring {
  std::size_t k = 1;
  std::vector<Color> color;
};

// Throws std::invalid_argument if the orderings differ in length, are not
// permutations of 0..m-1, or k does not divide m.
TupleMultigraph build_tuple_multigraph(const Permutation& a, const Permutation& b,
                                       std::size_t k);

// Peels k perfect matchings off a k-regular bipartite multigraph with
// augmenting-path search. Throws std::invalid_argument if not k-regular.
EdgeColoring edge_color_regular_bipartite(const TupleMultigraph& g);

// Checks propriety and that every color class is a perfect matching.
bool is_perfect_matching_decomposition(const TupleMultigraph& g, const EdgeColoring& ec);

// Two linear orderings, every (2k-1)-window polychromatic. Pads with
// k - (n mod k) items appended to both orderings when k does not divide n.
Coloring color_planar(const PermutationInstance& inst, std::size_t k);

struct PlanarTrace {
  Coloring coloring;
  std::vector<Permutation> padded;  // both orderings including pad items >= n
  TupleMultigraph graph;
  EdgeColoring edges;
};

// Same as color_planar but also returns the intermediate multigraph.
PlanarTrace color_planar_traced(const PermutationInstance& inst, std::size_t k);

struct CircularColoring {
  Coloring coloring;
  std::size_t achieved_bound = 1;
};

// Two circular orderings. Groups alternate between k real items and small
// groups padded with shared dummies; achieved_bound = 2(k-1) + ceil(b/a) + 1.
// Throws std::invalid_argument if n < k.
CircularColoring color_circular(const PermutationInstance& inst, std::size_t k);

// k = 2, window 2: alternate along the first ordering and accept iff the
// second ordering alternates too. No other 2-coloring can do better.
std::optional<Coloring> decide_two_window(const PermutationInstance& inst);

}  // namespace polystrip
