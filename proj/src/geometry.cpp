#include "polystrip/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace polystrip {

void StripSet::validate() const {
  for (std::size_t i = 0; i < strips.size(); ++i) {
    const Strip& s = strips[i];
    if (s.axis >= d) throw std::invalid_argument("strip " + std::to_string(i) + " axis out of range");
    if (!std::isfinite(s.lo) || !std::isfinite(s.hi) || !(s.lo < s.hi)) {
      throw std::invalid_argument("strip " + std::to_string(i) + " needs finite lo < hi");
    }
  }
}

namespace {

void validate_points(const PointSet& ps) {
  if (ps.points.empty()) throw std::invalid_argument("point set is empty");
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    const auto& p = ps.points[i];
    if (p.size() != ps.d) {
      throw std::invalid_argument("point " + std::to_string(i) + " has wrong arity");
    }
    for (double x : p) {
      if (!std::isfinite(x)) {
        throw std::invalid_argument("point " + std::to_string(i) + " has a non-finite coordinate");
      }
    }
  }
}

Permutation identity(std::size_t n) {
  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), Item{0});
  return perm;
}

}  // namespace

PermutationInstance points_to_instance(const PointSet& ps) {
  validate_points(ps);
  if (ps.d == 0) throw std::invalid_argument("point set needs d >= 1");
  std::vector<Permutation> perms;
  perms.reserve(ps.d);
  for (std::size_t axis = 0; axis < ps.d; ++axis) {
    Permutation perm = identity(ps.size());
    std::stable_sort(perm.begin(), perm.end(), [&](Item a, Item b) {
      return ps.points[a][axis] < ps.points[b][axis];
    });
    perms.push_back(std::move(perm));
  }
  return PermutationInstance(ps.size(), false, std::move(perms));
}

PermutationInstance wedges_to_instance(const PointSet& ps,
                                       const std::vector<std::array<double, 2>>& apices) {
  if (ps.d != 2) throw std::invalid_argument("wedge orderings need planar points");
  validate_points(ps);
  if (apices.empty()) throw std::invalid_argument("need at least one apex");

  struct Key {
    double angle;
    double dist;
  };
  std::vector<Permutation> perms;
  std::vector<Key> keys(ps.size());
  for (const auto& apex : apices) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const double dx = ps.points[i][0] - apex[0];
      const double dy = ps.points[i][1] - apex[1];
      if (dx == 0.0 && dy == 0.0) {
        throw std::invalid_argument("point " + std::to_string(i) + " coincides with an apex");
      }
      double angle = std::atan2(dy, dx);
      if (angle < 0.0) angle += 2.0 * std::numbers::pi;
      keys[i] = {angle, std::hypot(dx, dy)};
    }
    Permutation perm = identity(ps.size());
    std::sort(perm.begin(), perm.end(), [&](Item a, Item b) {
      if (keys[a].angle != keys[b].angle) return keys[a].angle < keys[b].angle;
      if (keys[a].dist != keys[b].dist) return keys[a].dist < keys[b].dist;
      return a < b;
    });
    perms.push_back(std::move(perm));
  }
  return PermutationInstance(ps.size(), true, std::move(perms));
}

std::vector<std::vector<Interval>> strips_to_axis_intervals(const StripSet& ss) {
  ss.validate();
  std::vector<std::vector<Interval>> out(ss.d);
  for (std::size_t i = 0; i < ss.strips.size(); ++i) {
    const Strip& s = ss.strips[i];
    out[s.axis].push_back({s.lo, s.hi, i});
  }
  return out;
}

}  // namespace polystrip
