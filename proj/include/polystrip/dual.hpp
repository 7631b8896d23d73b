#pragma once

#include <cstddef>
#include <vector>

#include "polystrip/geometry.hpp"
#include "polystrip/instance.hpp"

namespace polystrip {

struct DepthWitness {
  std::vector<double> point;
  std::size_t depth = 0;
  std::vector<Color> colors;  // distinct colors covering the point, ascending
};

struct DepthReport {
  bool valid = true;
  std::size_t threshold = 0;
  std::size_t candidates = 0;
  std::vector<DepthWitness> witnesses;
};

// Colors intervals (indexed by position in `intervals`, not by id) so that
// every point covered by j intervals sees min(j, k) distinct colors.
Coloring color_intervals(const std::vector<Interval>& intervals, std::size_t k);

// color_intervals applied independently to each axis. Every point covered by
// at least d(k-1)+1 strips is then covered by all k colors.
Coloring color_strips(const StripSet& ss, std::size_t k);

// Evaluates every cell of the arrangement of strip endpoints (endpoint
// coordinates, midpoints between consecutive endpoints, and one point beyond
// each end per axis). Reports cells of depth >= threshold missing a color.
DepthReport verify_depth(const StripSet& ss, const Coloring& col, std::size_t threshold);

// Depth and distinct colors of the strips covering one point.
DepthWitness depth_at(const StripSet& ss, const Coloring& col, const std::vector<double>& point);

}  // namespace polystrip
