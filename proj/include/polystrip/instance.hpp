#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace polystrip {

using Item = std::uint32_t;
using Color = std::uint32_t;
using Permutation = std::vector<Item>;

// Raised when a search or resampling loop runs past its caller-supplied budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// n items under d orderings. Linear orderings model points vs. axis-aligned
// strips; circular orderings model points vs. wedges around an apex.
class PermutationInstance {
 public:
  PermutationInstance() = default;
  // Throws std::invalid_argument unless every ordering is a permutation of 0..n-1.
  PermutationInstance(std::size_t n, bool circular, std::vector<Permutation> perms);

  std::size_t n() const { return n_; }
  std::size_t d() const { return perms_.size(); }
  bool circular() const { return circular_; }
  const std::vector<Permutation>& perms() const { return perms_; }
  const Permutation& perm(std::size_t i) const { return perms_.at(i); }

  friend bool operator==(const PermutationInstance&, const PermutationInstance&) = default;

 private:
  std::size_t n_ = 0;
  bool circular_ = false;
  std::vector<Permutation> perms_;
};

struct Coloring {
  Color k = 1;
  std::vector<Color> colors;

  Coloring() = default;
  // Throws std::invalid_argument on k == 0 or an entry >= k.
  Coloring(Color k, std::vector<Color> colors);

  std::size_t size() const { return colors.size(); }
  Color operator[](std::size_t i) const { return colors[i]; }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct WindowViolation {
  std::size_t perm = 0;
  std::size_t start = 0;
  std::size_t length = 0;

  friend bool operator==(const WindowViolation&, const WindowViolation&) = default;
};

struct VerificationReport {
  bool valid = true;
  std::size_t window = 0;      // queried window size
  std::size_t min_window = 1;  // n + 1 when some color never appears
  bool missing_color = false;
  std::vector<WindowViolation> violations;
};

struct MinWindow {
  std::size_t size = 1;
  bool missing_color = false;
};

// Least p such that every p-window of every ordering sees all k colors.
// Computed from the longest run (wrapping iff circular) avoiding each color.
MinWindow min_polychromatic_window(const PermutationInstance& inst, const Coloring& col);

// Checks every contiguous window of exactly p items. For linear instances
// p > n is vacuously valid; for circular instances p must lie in 1..n.
VerificationReport verify_windows(const PermutationInstance& inst, const Coloring& col,
                                  std::size_t p);

struct BoundsTable {
  std::size_t k = 1;
  std::size_t d = 1;
  std::size_t p_upper = 1;        // strips, linear orderings
  std::size_t p_circ_upper = 1;   // circular orderings
  std::size_t p_dual_upper = 1;   // coloring strips w.r.t. deep points
  std::size_t lower = 1;          // shared by all three
};

BoundsTable bounds_table(std::size_t k, std::size_t d);

// d independent uniform permutations drawn from a seeded generator.
PermutationInstance gen_random_instance(std::uint64_t seed, std::size_t n, std::size_t d,
                                        bool circular);

// floor((2d-1)k / (2d)): cluster size of the lower-bound constructions.
std::size_t cluster_size(std::size_t k, std::size_t d);

}  // namespace polystrip
