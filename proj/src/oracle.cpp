#include "polystrip/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace polystrip {

namespace {

void charge(std::uint64_t& nodes, const SearchBudget& budget) {
  if (++nodes > budget.max_nodes) {
    throw BudgetExceeded("search exceeded " + std::to_string(budget.max_nodes) + " nodes");
  }
}

// Depth-first assignment of colors with per-window color counts. A partial
// coloring is pruned once some window lacks more colors than it has
// unassigned slots.
class WindowSearch {
 public:
  WindowSearch(const PermutationInstance& inst, std::size_t k, std::size_t p,
               SearchBudget budget)
      : k_(k), budget_(budget), colors_(inst.n(), 0) {
    const std::size_t n = inst.n();
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    if (p == 0) throw std::invalid_argument("window size must be at least 1");
    if (inst.circular() && p > n) {
      throw std::invalid_argument("circular window size must not exceed the item count");
    }
    windows_of_.resize(n);
    if (p <= n) {
      const std::size_t starts = inst.circular() ? n : n - p + 1;
      for (const auto& perm : inst.perms()) {
        for (std::size_t s = 0; s < starts; ++s) {
          const std::size_t w = unassigned_.size();
          unassigned_.push_back(p);
          distinct_.push_back(0);
          for (std::size_t i = 0; i < p; ++i) windows_of_[perm[(s + i) % n]].push_back(w);
        }
      }
    }
    count_.assign(unassigned_.size() * k, 0);
  }

  // Items are assigned in `order`. With `break_symmetry`, the item at depth i
  // may only open one new color.
  bool run(const std::vector<Item>& order, bool break_symmetry) {
    order_ = order;
    break_symmetry_ = break_symmetry;
    return dfs(0, 0);
  }

  Coloring coloring() const { return Coloring(static_cast<Color>(k_), colors_); }

 private:
  bool place(Item item, Color c) {
    bool ok = true;
    for (std::size_t w : windows_of_[item]) {
      --unassigned_[w];
      if (count_[w * k_ + c]++ == 0) ++distinct_[w];
      if (k_ - distinct_[w] > unassigned_[w]) ok = false;
    }
    return ok;
  }

  void unplace(Item item, Color c) {
    for (std::size_t w : windows_of_[item]) {
      ++unassigned_[w];
      if (--count_[w * k_ + c] == 0) --distinct_[w];
    }
  }

  bool dfs(std::size_t depth, std::size_t used) {
    if (depth == order_.size()) return true;
    const Item item = order_[depth];
    const std::size_t limit = break_symmetry_ ? std::min(k_, used + 1) : k_;
    for (std::size_t c = 0; c < limit; ++c) {
      charge(nodes_, budget_);
      colors_[item] = static_cast<Color>(c);
      const bool ok = place(item, static_cast<Color>(c));
      if (ok && dfs(depth + 1, std::max(used, c + 1))) return true;
      unplace(item, static_cast<Color>(c));
    }
    return false;
  }

  std::size_t k_;
  SearchBudget budget_;
  std::uint64_t nodes_ = 0;
  bool break_symmetry_ = false;
  std::vector<Item> order_;
  std::vector<Color> colors_;
  std::vector<std::vector<std::size_t>> windows_of_;
  std::vector<std::size_t> unassigned_;
  std::vector<std::size_t> distinct_;
  std::vector<std::size_t> count_;
};

}  // namespace

std::optional<Coloring> exhaustive_best_coloring(const PermutationInstance& inst, std::size_t k,
                                                 std::size_t p, SearchBudget budget) {
  WindowSearch search(inst, k, p, budget);
  std::vector<Item> order(inst.n());
  std::iota(order.begin(), order.end(), Item{0});
  if (!search.run(order, false)) return std::nullopt;
  return search.coloring();
}

bool exists_valid_coloring(const PermutationInstance& inst, std::size_t k, std::size_t p,
                           SearchBudget budget) {
  WindowSearch search(inst, k, p, budget);
  return search.run(inst.perm(0), true);
}

std::size_t min_achievable_window(const PermutationInstance& inst, std::size_t k,
                                  SearchBudget budget) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  const std::size_t n = inst.n();
  for (std::size_t p = k; p <= n; ++p) {
    if (exists_valid_coloring(inst, k, p, budget)) return p;
  }
  return n + 1;
}

namespace {

class TripleSearch {
 public:
  TripleSearch(const PermutationInstance& inst, SearchBudget budget)
      : inst_(inst), budget_(budget), value_(inst.n(), -1), triples_of_(inst.n()) {
    const std::size_t n = inst.n();
    if (n >= 3) {
      const std::size_t starts = inst.circular() ? n : n - 2;
      for (const auto& perm : inst.perms()) {
        for (std::size_t s = 0; s < starts; ++s) {
          const std::array<Item, 3> t{perm[s], perm[(s + 1) % n], perm[(s + 2) % n]};
          for (Item x : t) triples_of_[x].push_back(triples_.size());
          triples_.push_back(t);
        }
      }
    }
  }

  std::optional<Coloring> run() {
    if (!dfs(0)) return std::nullopt;
    std::vector<Color> colors(value_.begin(), value_.end());
    return Coloring(2, std::move(colors));
  }

 private:
  // Sets x and propagates forced values; false on a monochromatic triple.
  bool assign(Item x, int v) {
    value_[x] = static_cast<signed char>(v);
    trail_.push_back(x);
    std::size_t head = trail_.size() - 1;
    while (head < trail_.size()) {
      const Item y = trail_[head++];
      for (std::size_t ti : triples_of_[y]) {
        const auto& t = triples_[ti];
        const int a = value_[t[0]], b = value_[t[1]], c = value_[t[2]];
        if (a >= 0 && a == b && b == c) return false;
        auto force = [&](Item z, int same) {
          value_[z] = static_cast<signed char>(1 - same);
          trail_.push_back(z);
        };
        if (a >= 0 && a == b && c < 0) force(t[2], a);
        else if (a >= 0 && a == c && b < 0) force(t[1], a);
        else if (b >= 0 && b == c && a < 0) force(t[0], b);
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  bool dfs(std::size_t pos) {
    const Permutation& order = inst_.perm(0);
    while (pos < order.size() && value_[order[pos]] >= 0) ++pos;
    if (pos == order.size()) return true;
    const Item x = order[pos];
    for (int v = 0; v < 2; ++v) {
      charge(nodes_, budget_);
      const std::size_t mark = trail_.size();
      if (assign(x, v) && dfs(pos + 1)) return true;
      undo(mark);
    }
    return false;
  }

  const PermutationInstance& inst_;
  SearchBudget budget_;
  std::uint64_t nodes_ = 0;
  std::vector<signed char> value_;
  std::vector<Item> trail_;
  std::vector<std::array<Item, 3>> triples_;
  std::vector<std::vector<std::size_t>> triples_of_;
};

}  // namespace

std::optional<Coloring> solve_triples(const PermutationInstance& inst, SearchBudget budget) {
  return TripleSearch(inst, budget).run();
}

std::optional<Assignment> nae_brute_force(const NAEFormula& f, SearchBudget budget) {
  f.validate();
  const std::size_t nv = f.num_vars;
  // Clauses are checked as soon as their last variable is set.
  std::vector<std::vector<std::size_t>> closes(nv);
  for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
    std::size_t last = 0;
    for (const auto& l : f.clauses[ci]) last = std::max(last, l.var);
    closes[last].push_back(ci);
  }

  Assignment a(nv, false);
  std::uint64_t nodes = 0;
  auto clause_ok = [&](const Clause& c) {
    bool t = false, fl = false;
    for (const auto& l : c) (a[l.var] == l.positive ? t : fl) = true;
    return t && fl;
  };
  // Iterative lexicographic DFS: tried[v] counts values explored at depth v.
  std::vector<int> tried(nv, 0);
  std::size_t depth = 0;
  if (nv == 0) {
    for (const auto& c : f.clauses) {
      if (!clause_ok(c)) return std::nullopt;
    }
    return a;
  }
  while (true) {
    if (tried[depth] == 2) {
      tried[depth] = 0;
      if (depth == 0) return std::nullopt;
      --depth;
      continue;
    }
    charge(nodes, budget);
    a[depth] = tried[depth]++ == 1;
    const bool ok = std::all_of(closes[depth].begin(), closes[depth].end(),
                                [&](std::size_t ci) { return clause_ok(f.clauses[ci]); });
    if (!ok) continue;
    if (depth + 1 == nv) return a;
    ++depth;
  }
}

}  // namespace polystrip
