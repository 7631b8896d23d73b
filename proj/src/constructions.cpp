#include "polystrip/constructions.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace polystrip {

HamPathDecomposition ham_path_decomposition(std::size_t h) {
  if (h == 0) throw std::invalid_argument("decomposition needs h >= 1");
  const std::size_t m = 2 * h;
  HamPathDecomposition dec;
  dec.h = h;
  // Zigzag: j, j+1, j-1, j+2, j-2, ..., j+h (mod 2h).
  for (std::size_t j = 0; j < h; ++j) {
    std::vector<std::size_t> path{j};
    for (std::size_t i = 1; i < h; ++i) {
      path.push_back((j + i) % m);
      path.push_back((j + m - i) % m);
    }
    path.push_back((j + h) % m);
    dec.paths.push_back(std::move(path));
  }
  if (!is_valid_decomposition(dec)) {
    throw std::logic_error("zigzag decomposition failed its invariant check");
  }
  return dec;
}

bool is_valid_decomposition(const HamPathDecomposition& dec) {
  const std::size_t m = 2 * dec.h;
  if (dec.paths.size() != dec.h) return false;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& path : dec.paths) {
    if (path.size() != m) return false;
    std::vector<char> seen(m, 0);
    for (std::size_t v : path) {
      if (v >= m || seen[v]) return false;
      seen[v] = 1;
    }
    for (std::size_t i = 1; i < m; ++i) {
      const auto e = std::minmax(path[i - 1], path[i]);
      if (!edges.insert(e).second) return false;
    }
  }
  return edges.size() == m * (m - 1) / 2;
}

LowerBoundInstance primal_lower_bound(std::size_t k, std::size_t d) {
  if (k == 0 || d == 0) throw std::invalid_argument("lower bound needs k, d >= 1");
  const std::size_t s = cluster_size(k, d);
  if (s == 0) {
    throw std::invalid_argument("cluster size floor((2d-1)k/2d) is 0 for k=" +
                                std::to_string(k) + ", d=" + std::to_string(d));
  }
  const HamPathDecomposition dec = ham_path_decomposition(d);
  const std::size_t groups = 2 * d;

  LowerBoundInstance lb;
  lb.k = k;
  lb.d = d;
  lb.cluster = s;
  lb.claimed_bound = 2 * s + 1;
  lb.clusters.resize(groups);
  for (std::size_t g = 0; g < groups; ++g) {
    for (std::size_t i = 0; i < s; ++i) lb.clusters[g].push_back(g * s + i);
  }
  std::vector<Permutation> perms;
  for (const auto& path : dec.paths) {
    Permutation perm;
    for (std::size_t g : path) {
      for (std::size_t item : lb.clusters[g]) perm.push_back(static_cast<Item>(item));
    }
    perms.push_back(std::move(perm));
  }
  lb.primal = PermutationInstance(groups * s, false, std::move(perms));
  return lb;
}

LowerBoundInstance dual_lower_bound(std::size_t k, std::size_t d) {
  if (k == 0 || d == 0) throw std::invalid_argument("lower bound needs k, d >= 1");
  const std::size_t t = cluster_size(k, d);
  if (t == 0) {
    throw std::invalid_argument("strip group size floor((2d-1)k/2d) is 0 for k=" +
                                std::to_string(k) + ", d=" + std::to_string(d));
  }
  const std::size_t groups = 2 * d;

  LowerBoundInstance lb;
  lb.k = k;
  lb.d = d;
  lb.cluster = t;
  lb.claimed_bound = 2 * t + 1;
  lb.clusters.resize(groups);
  StripSet ss;
  ss.d = d;
  for (std::size_t g = 0; g < groups; ++g) {
    const double lo = g % 2 == 0 ? 0.0 : 1.0;
    for (std::size_t i = 0; i < t; ++i) {
      lb.clusters[g].push_back(ss.strips.size());
      ss.strips.push_back({g / 2, lo, lo + 2.0});
    }
  }
  lb.dual = std::move(ss);

  // Group 2i lives on [0,2] and group 2i+1 on [1,3] of axis i; -1 misses both.
  auto coordinate = [](std::size_t g) { return g % 2 == 0 ? 0.5 : 2.5; };
  for (std::size_t a = 0; a < groups; ++a) {
    for (std::size_t b = a + 1; b < groups; ++b) {
      DualWitness w{a, b, std::vector<double>(d, -1.0)};
      if (a / 2 == b / 2) {
        w.point[a / 2] = 1.5;
      } else {
        w.point[a / 2] = coordinate(a);
        w.point[b / 2] = coordinate(b);
      }
      lb.witnesses.push_back(std::move(w));
    }
  }
  return lb;
}

LowerBoundInstance enlarge_instance(const LowerBoundInstance& lb, std::size_t extra) {
  LowerBoundInstance out = lb;
  if (extra == 0) return out;
  if (lb.primal) {
    const std::size_t n = lb.primal->n();
    std::vector<Permutation> perms = lb.primal->perms();
    for (auto& perm : perms) {
      for (std::size_t i = 0; i < extra; ++i) perm.push_back(static_cast<Item>(n + i));
    }
    out.primal = PermutationInstance(n + extra, false, std::move(perms));
  } else if (lb.dual) {
    for (std::size_t i = 0; i < extra; ++i) {
      const double lo = 10.0 + 3.0 * static_cast<double>(i);
      out.dual->strips.push_back({0, lo, lo + 1.0});
    }
  }
  return out;
}

}  // namespace polystrip
