#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "polystrip/instance.hpp"

namespace polystrip {

struct PointSet {
  std::size_t d = 2;
  std::vector<std::vector<double>> points;

  std::size_t size() const { return points.size(); }
};

struct Strip {
  std::size_t axis = 0;
  double lo = 0.0;
  double hi = 1.0;
};

// Strips are closed slabs lo <= x[axis] <= hi.
struct StripSet {
  std::size_t d = 2;
  std::vector<Strip> strips;

  std::size_t size() const { return strips.size(); }
  // Throws std::invalid_argument if some strip has lo >= hi or axis >= d.
  void validate() const;
};

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t id = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// One ordering per axis: stable sort by coordinate, ties by item id.
PermutationInstance points_to_instance(const PointSet& ps);

// One circular ordering per apex: counterclockwise angle from the positive
// x direction, ties by distance then id.
PermutationInstance wedges_to_instance(const PointSet& ps,
                                       const std::vector<std::array<double, 2>>& apices);

// Partition of strips by axis; each interval keeps its strip index as id.
std::vector<std::vector<Interval>> strips_to_axis_intervals(const StripSet& ss);

}  // namespace polystrip
