#include "polystrip/dual.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace polystrip {

Coloring color_intervals(const std::vector<Interval>& intervals, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  const std::size_t m = intervals.size();
  for (const auto& iv : intervals) {
    if (!(iv.lo < iv.hi)) throw std::invalid_argument("interval needs lo < hi");
  }

  // Decreasing right endpoint. Every interval colored before I reaches at
  // least I.hi, so it meets I iff its left endpoint is <= I.hi, and the ones
  // covering any x in I are a prefix of them in left-endpoint order.
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (intervals[a].hi != intervals[b].hi) return intervals[a].hi > intervals[b].hi;
    return intervals[a].id < intervals[b].id;
  });

  std::vector<Color> colors(m, 0);
  std::set<std::tuple<double, std::size_t, std::size_t>> colored;  // (lo, id, index)
  std::vector<char> forbidden(k);
  for (std::size_t idx : order) {
    const Interval& iv = intervals[idx];
    std::fill(forbidden.begin(), forbidden.end(), 0);
    std::size_t taken = 0;
    for (auto it = colored.begin(); it != colored.end() && taken + 1 < k; ++it, ++taken) {
      if (std::get<0>(*it) > iv.hi) break;
      forbidden[colors[std::get<2>(*it)]] = 1;
    }
    const auto free = std::find(forbidden.begin(), forbidden.end(), 0);
    colors[idx] = static_cast<Color>(free - forbidden.begin());
    colored.emplace(iv.lo, iv.id, idx);
  }
  return Coloring(static_cast<Color>(k), std::move(colors));
}

Coloring color_strips(const StripSet& ss, std::size_t k) {
  const auto per_axis = strips_to_axis_intervals(ss);
  std::vector<Color> colors(ss.size(), 0);
  for (const auto& intervals : per_axis) {
    const Coloring axis_colors = color_intervals(intervals, k);
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      colors[intervals[i].id] = axis_colors[i];
    }
  }
  return Coloring(static_cast<Color>(k), std::move(colors));
}

namespace {

std::vector<double> axis_candidates(const std::vector<Interval>& intervals) {
  std::vector<double> ends;
  for (const auto& iv : intervals) {
    ends.push_back(iv.lo);
    ends.push_back(iv.hi);
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  if (ends.empty()) return {0.0};
  std::vector<double> out{ends.front() - 1.0};
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (i > 0) out.push_back(ends[i - 1] + (ends[i] - ends[i - 1]) / 2.0);
    out.push_back(ends[i]);
  }
  out.push_back(ends.back() + 1.0);
  return out;
}

void check_coloring(const StripSet& ss, const Coloring& col) {
  if (col.size() != ss.size()) {
    throw std::invalid_argument("strip coloring length does not match strip count");
  }
}

}  // namespace

DepthWitness depth_at(const StripSet& ss, const Coloring& col, const std::vector<double>& point) {
  check_coloring(ss, col);
  if (point.size() != ss.d) throw std::invalid_argument("point has wrong dimension");
  DepthWitness w;
  w.point = point;
  std::vector<char> seen(col.k, 0);
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const Strip& s = ss.strips[i];
    if (s.lo <= point[s.axis] && point[s.axis] <= s.hi) {
      ++w.depth;
      seen[col[i]] = 1;
    }
  }
  for (Color c = 0; c < col.k; ++c) {
    if (seen[c]) w.colors.push_back(c);
  }
  return w;
}

DepthReport verify_depth(const StripSet& ss, const Coloring& col, std::size_t threshold) {
  check_coloring(ss, col);
  const auto per_axis = strips_to_axis_intervals(ss);
  const std::size_t d = ss.d;
  const std::size_t k = col.k;

  // Per axis and candidate coordinate: color histogram of covering strips.
  std::vector<std::vector<double>> coords(d);
  std::vector<std::vector<std::vector<std::size_t>>> hist(d);
  for (std::size_t axis = 0; axis < d; ++axis) {
    coords[axis] = axis_candidates(per_axis[axis]);
    hist[axis].assign(coords[axis].size(), std::vector<std::size_t>(k, 0));
    for (std::size_t c = 0; c < coords[axis].size(); ++c) {
      const double x = coords[axis][c];
      for (const auto& iv : per_axis[axis]) {
        if (iv.lo <= x && x <= iv.hi) ++hist[axis][c][col[iv.id]];
      }
    }
  }

  DepthReport report;
  report.threshold = threshold;
  std::vector<std::size_t> cell(d, 0);
  std::vector<std::size_t> total(k);
  while (true) {
    ++report.candidates;
    std::fill(total.begin(), total.end(), 0);
    std::size_t depth = 0;
    for (std::size_t axis = 0; axis < d; ++axis) {
      const auto& h = hist[axis][cell[axis]];
      for (std::size_t c = 0; c < k; ++c) {
        total[c] += h[c];
        depth += h[c];
      }
    }
    if (depth >= threshold &&
        std::any_of(total.begin(), total.end(), [](std::size_t x) { return x == 0; })) {
      DepthWitness w;
      for (std::size_t axis = 0; axis < d; ++axis) w.point.push_back(coords[axis][cell[axis]]);
      w.depth = depth;
      for (Color c = 0; c < k; ++c) {
        if (total[c] > 0) w.colors.push_back(c);
      }
      report.witnesses.push_back(std::move(w));
    }

    std::size_t axis = 0;
    while (axis < d && ++cell[axis] == coords[axis].size()) cell[axis++] = 0;
    if (axis == d) break;
  }
  report.valid = report.witnesses.empty();
  return report;
}

}  // namespace polystrip
