#include "polystrip/planar.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace polystrip {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Hopcroft-Karp over the uncolored edges. Left vertices are tried in index
// order and adjacency is scanned in edge (item) order.
class MatchingPeeler {
 public:
  explicit MatchingPeeler(const TupleMultigraph& g) : g_(g) {
    const std::size_t m = g.left.size();
    adj_.resize(m);
    pair_left_.resize(m);
    pair_right_.resize(g.right.size());
    dist_.resize(m);
    iter_.resize(m);
  }

  // Perfect matching among edges with used[e] == false, as edge indices.
  std::vector<std::size_t> perfect_matching(const std::vector<char>& used) {
    for (auto& a : adj_) a.clear();
    for (std::size_t e = 0; e < g_.edges.size(); ++e) {
      if (!used[e]) adj_[g_.edges[e].left].push_back(e);
    }
    std::fill(pair_left_.begin(), pair_left_.end(), kNone);
    std::fill(pair_right_.begin(), pair_right_.end(), kNone);

    std::size_t matched = 0;
    while (layer()) {
      std::fill(iter_.begin(), iter_.end(), 0);
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (pair_left_[u] == kNone && augment(u)) ++matched;
      }
    }
    if (matched != adj_.size()) {
      throw std::logic_error("regular bipartite multigraph without a perfect matching");
    }
    return pair_left_;
  }

 private:
  bool layer() {
    std::vector<std::size_t> queue;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (pair_left_[u] == kNone) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kNone;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (std::size_t e : adj_[u]) {
        const std::size_t pe = pair_right_[g_.edges[e].right];
        if (pe == kNone) {
          found = true;
        } else {
          const std::size_t w = g_.edges[pe].left;
          if (dist_[w] == kNone) {
            dist_[w] = dist_[u] + 1;
            queue.push_back(w);
          }
        }
      }
    }
    return found;
  }

  bool augment(std::size_t root) {
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      if (iter_[u] == adj_[u].size()) {
        dist_[u] = kNone;
        stack.pop_back();
        continue;
      }
      const std::size_t e = adj_[u][iter_[u]];
      const std::size_t pe = pair_right_[g_.edges[e].right];
      if (pe == kNone) {
        for (std::size_t x : stack) {
          const std::size_t ex = adj_[x][iter_[x]];
          pair_left_[x] = ex;
          pair_right_[g_.edges[ex].right] = ex;
        }
        return true;
      }
      const std::size_t w = g_.edges[pe].left;
      if (dist_[w] != kNone && dist_[w] == dist_[u] + 1) {
        stack.push_back(w);
      } else {
        ++iter_[u];
      }
    }
    return false;
  }

  const TupleMultigraph& g_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> pair_left_;
  std::vector<std::size_t> pair_right_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> iter_;
};

std::vector<std::vector<Item>> tuples(const Permutation& perm, std::size_t k) {
  std::vector<std::vector<Item>> out;
  for (std::size_t i = 0; i < perm.size(); i += k) {
    out.emplace_back(perm.begin() + static_cast<std::ptrdiff_t>(i),
                     perm.begin() + static_cast<std::ptrdiff_t>(i + k));
  }
  return out;
}

}  // namespace

TupleMultigraph build_tuple_multigraph(const Permutation& a, const Permutation& b,
                                       std::size_t k) {
  const std::size_t m = a.size();
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (b.size() != m) throw std::invalid_argument("orderings have different lengths");
  if (m % k != 0) {
    throw std::invalid_argument("k=" + std::to_string(k) + " does not divide item count " +
                                std::to_string(m) + "; pad first");
  }
  // Validates both as permutations of 0..m-1.
  const PermutationInstance check(m, false, {a, b});

  TupleMultigraph g;
  g.k = k;
  g.left = tuples(a, k);
  g.right = tuples(b, k);
  g.edges.resize(m);
  for (std::size_t pos = 0; pos < m; ++pos) {
    g.edges[a[pos]].left = pos / k;
    g.edges[a[pos]].item = a[pos];
    g.edges[b[pos]].right = pos / k;
  }
  return g;
}

EdgeColoring edge_color_regular_bipartite(const TupleMultigraph& g) {
  const std::size_t k = g.k;
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  std::vector<std::size_t> deg_left(g.left.size()), deg_right(g.right.size());
  for (const auto& e : g.edges) {
    if (e.left >= g.left.size() || e.right >= g.right.size()) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    ++deg_left[e.left];
    ++deg_right[e.right];
  }
  auto regular = [k](const std::vector<std::size_t>& deg) {
    return std::all_of(deg.begin(), deg.end(), [k](std::size_t x) { return x == k; });
  };
  if (!regular(deg_left) || !regular(deg_right) || g.left.size() != g.right.size()) {
    throw std::invalid_argument("multigraph is not " + std::to_string(k) + "-regular");
  }

  EdgeColoring ec;
  ec.k = k;
  ec.color.assign(g.edges.size(), 0);
  if (k == 1) return ec;

  std::vector<char> used(g.edges.size(), 0);
  MatchingPeeler peeler(g);
  for (std::size_t c = 0; c + 1 < k; ++c) {
    for (std::size_t e : peeler.perfect_matching(used)) {
      used[e] = 1;
      ec.color[e] = static_cast<Color>(c);
    }
  }
  // What remains is 1-regular.
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!used[e]) ec.color[e] = static_cast<Color>(k - 1);
  }
  return ec;
}

bool is_perfect_matching_decomposition(const TupleMultigraph& g, const EdgeColoring& ec) {
  if (ec.color.size() != g.edges.size()) return false;
  const std::size_t k = ec.k;
  std::vector<std::size_t> left(g.left.size() * k), right(g.right.size() * k);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const Color c = ec.color[e];
    if (c >= k) return false;
    ++left[g.edges[e].left * k + c];
    ++right[g.edges[e].right * k + c];
  }
  auto once = [](std::size_t x) { return x == 1; };
  return std::all_of(left.begin(), left.end(), once) &&
         std::all_of(right.begin(), right.end(), once);
}

PlanarTrace color_planar_traced(const PermutationInstance& inst, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (inst.d() != 2 || inst.circular()) {
    throw std::invalid_argument("planar coloring needs two linear orderings");
  }
  const std::size_t n = inst.n();
  const std::size_t padded = (n + k - 1) / k * k;

  PlanarTrace trace;
  trace.padded = inst.perms();
  for (auto& perm : trace.padded) {
    for (std::size_t q = n; q < padded; ++q) perm.push_back(static_cast<Item>(q));
  }
  trace.graph = build_tuple_multigraph(trace.padded[0], trace.padded[1], k);
  trace.edges = edge_color_regular_bipartite(trace.graph);

  std::vector<Color> colors(trace.edges.color.begin(),
                            trace.edges.color.begin() + static_cast<std::ptrdiff_t>(n));
  trace.coloring = Coloring(static_cast<Color>(k), std::move(colors));

  if (!verify_windows(inst, trace.coloring, 2 * k - 1).valid) {
    throw std::logic_error("planar coloring failed its (2k-1)-window check");
  }
  return trace;
}

Coloring color_planar(const PermutationInstance& inst, std::size_t k) {
  return color_planar_traced(inst, k).coloring;
}

CircularColoring color_circular(const PermutationInstance& inst, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (inst.d() != 2 || !inst.circular()) {
    throw std::invalid_argument("circular coloring needs two circular orderings");
  }
  const std::size_t n = inst.n();
  if (n < k) throw std::invalid_argument("circular coloring needs n >= k");

  const std::size_t a = n / k;
  const std::size_t b = n % k;

  std::vector<Permutation> padded(2);
  for (std::size_t pi = 0; pi < 2; ++pi) {
    const Permutation& perm = inst.perm(pi);
    Permutation& out = padded[pi];
    if (b == 0) {
      out = perm;
      continue;
    }
    std::size_t pos = 0;
    Item dummy = static_cast<Item>(n);
    for (std::size_t j = 0; j < a; ++j) {
      for (std::size_t i = 0; i < k; ++i) out.push_back(perm[pos++]);
      const std::size_t small = b / a + (j < b % a ? 1 : 0);
      for (std::size_t i = 0; i < small; ++i) out.push_back(perm[pos++]);
      for (std::size_t i = small; i < k; ++i) out.push_back(dummy++);
    }
  }

  const TupleMultigraph g = build_tuple_multigraph(padded[0], padded[1], k);
  const EdgeColoring ec = edge_color_regular_bipartite(g);

  CircularColoring out;
  out.coloring = Coloring(static_cast<Color>(k),
                          std::vector<Color>(ec.color.begin(),
                                             ec.color.begin() + static_cast<std::ptrdiff_t>(n)));
  const std::size_t largest_small = b == 0 ? 0 : (b + a - 1) / a;
  out.achieved_bound = 2 * (k - 1) + largest_small + 1;
  if (!verify_windows(inst, out.coloring, std::min(out.achieved_bound, n)).valid) {
    throw std::logic_error("circular coloring failed its window check");
  }
  return out;
}

std::optional<Coloring> decide_two_window(const PermutationInstance& inst) {
  if (inst.d() != 2 || inst.circular()) {
    throw std::invalid_argument("two-window test needs two linear orderings");
  }
  std::vector<Color> colors(inst.n());
  const Permutation& first = inst.perm(0);
  for (std::size_t pos = 0; pos < first.size(); ++pos) colors[first[pos]] = pos % 2;
  const Permutation& second = inst.perm(1);
  for (std::size_t pos = 1; pos < second.size(); ++pos) {
    if (colors[second[pos]] == colors[second[pos - 1]]) return std::nullopt;
  }
  return Coloring(2, std::move(colors));
}

}  // namespace polystrip
