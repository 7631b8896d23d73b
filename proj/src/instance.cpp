#include "polystrip/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polystrip/rng.hpp"

namespace polystrip {

PermutationInstance::PermutationInstance(std::size_t n, bool circular,
                                         std::vector<Permutation> perms)
    : n_(n), circular_(circular), perms_(std::move(perms)) {
  if (n_ == 0) throw std::invalid_argument("instance needs at least one item");
  if (perms_.empty()) throw std::invalid_argument("instance needs at least one permutation");
  std::vector<char> seen(n_);
  for (std::size_t i = 0; i < perms_.size(); ++i) {
    const auto& perm = perms_[i];
    if (perm.size() != n_) {
      throw std::invalid_argument("permutation " + std::to_string(i) + " has length " +
                                  std::to_string(perm.size()) + ", expected " +
                                  std::to_string(n_));
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Item item : perm) {
      if (item >= n_ || seen[item]) {
        throw std::invalid_argument("permutation " + std::to_string(i) +
                                    " is not a permutation of 0..n-1");
      }
      seen[item] = 1;
    }
  }
}

Coloring::Coloring(Color k_, std::vector<Color> colors_) : k(k_), colors(std::move(colors_)) {
  if (k == 0) throw std::invalid_argument("coloring needs k >= 1");
  for (Color c : colors) {
    if (c >= k) throw std::invalid_argument("color id out of range");
  }
}

namespace {

void check_lengths(const PermutationInstance& inst, const Coloring& col) {
  if (col.size() != inst.n()) {
    throw std::invalid_argument("coloring has " + std::to_string(col.size()) +
                                " entries but instance has " + std::to_string(inst.n()) +
                                " items");
  }
}

}  // namespace

MinWindow min_polychromatic_window(const PermutationInstance& inst, const Coloring& col) {
  check_lengths(inst, col);
  const std::size_t n = inst.n();
  const std::size_t k = col.k;

  std::vector<std::size_t> present(k, 0);
  for (Color c : col.colors) ++present[c];
  if (std::any_of(present.begin(), present.end(), [](std::size_t c) { return c == 0; })) {
    return {n + 1, true};
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t longest_gap = 0;
  std::vector<std::size_t> first(k), last(k);
  for (const auto& perm : inst.perms()) {
    std::fill(first.begin(), first.end(), kNone);
    std::fill(last.begin(), last.end(), kNone);
    for (std::size_t pos = 0; pos < n; ++pos) {
      const Color c = col[perm[pos]];
      const std::size_t gap = last[c] == kNone ? pos : pos - last[c] - 1;
      if (first[c] == kNone) first[c] = pos;
      // The leading run only counts for linear orderings; circular ones
      // close it up with the tail below.
      if (last[c] != kNone || !inst.circular()) longest_gap = std::max(longest_gap, gap);
      last[c] = pos;
    }
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t tail = n - last[c] - 1;
      const std::size_t gap = inst.circular() ? tail + first[c] : tail;
      longest_gap = std::max(longest_gap, gap);
    }
  }
  return {longest_gap + 1, false};
}

VerificationReport verify_windows(const PermutationInstance& inst, const Coloring& col,
                                  std::size_t p) {
  check_lengths(inst, col);
  const std::size_t n = inst.n();
  if (p == 0) throw std::invalid_argument("window size must be at least 1");
  if (inst.circular() && p > n) {
    throw std::invalid_argument("circular window size must not exceed the item count");
  }

  VerificationReport report;
  report.window = p;
  const MinWindow mw = min_polychromatic_window(inst, col);
  report.min_window = mw.size;
  report.missing_color = mw.missing_color;
  if (p > n) return report;

  const std::size_t k = col.k;
  const std::size_t starts = inst.circular() ? n : n - p + 1;
  std::vector<std::size_t> count(k);
  for (std::size_t pi = 0; pi < inst.d(); ++pi) {
    const auto& perm = inst.perm(pi);
    std::fill(count.begin(), count.end(), 0);
    std::size_t distinct = 0;
    auto add = [&](std::size_t pos) {
      if (count[col[perm[pos % n]]]++ == 0) ++distinct;
    };
    auto remove = [&](std::size_t pos) {
      if (--count[col[perm[pos % n]]] == 0) --distinct;
    };
    for (std::size_t pos = 0; pos < p; ++pos) add(pos);
    for (std::size_t start = 0; start < starts; ++start) {
      if (start > 0) {
        remove(start - 1);
        add(start + p - 1);
      }
      if (distinct < k) report.violations.push_back({pi, start, p});
    }
  }
  report.valid = report.violations.empty();
  return report;
}

std::size_t cluster_size(std::size_t k, std::size_t d) { return (2 * d - 1) * k / (2 * d); }

BoundsTable bounds_table(std::size_t k, std::size_t d) {
  if (k == 0 || d == 0) throw std::invalid_argument("bounds need k >= 1 and d >= 1");
  const double kd = static_cast<double>(k);
  const double lll = kd * (4.0 * std::log(kd) + std::log(static_cast<double>(d)));
  const auto lll_bound = static_cast<std::size_t>(std::max(1.0, std::ceil(lll)));

  BoundsTable t;
  t.k = k;
  t.d = d;
  t.p_upper = d == 2 ? 2 * k - 1 : lll_bound;
  t.p_circ_upper = d == 2 ? 2 * k : lll_bound;
  t.p_dual_upper = d * (k - 1) + 1;
  t.lower = 2 * cluster_size(k, d) + 1;
  return t;
}

PermutationInstance gen_random_instance(std::uint64_t seed, std::size_t n, std::size_t d,
                                        bool circular) {
  if (n == 0 || d == 0) throw std::invalid_argument("random instance needs n >= 1 and d >= 1");
  Rng rng(seed);
  std::vector<Permutation> perms(d, Permutation(n));
  for (auto& perm : perms) {
    std::iota(perm.begin(), perm.end(), Item{0});
    rng.shuffle(std::span<Item>(perm));
  }
  return PermutationInstance(n, circular, std::move(perms));
}

}  // namespace polystrip
