#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "polystrip/instance.hpp"

namespace polystrip {

struct Literal {
  std::size_t var = 0;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;
using Assignment = std::vector<bool>;

struct NAEFormula {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;

  bool is_monotone() const;
  // Throws std::invalid_argument if a literal names a variable >= num_vars.
  void validate() const;
};

// Every clause has a true and a false literal.
bool is_nae(const NAEFormula& f, const Assignment& a);

// Text form: "p nae3 V C" header, then one clause per line as three nonzero
// 1-based integers (negative = negated), optionally terminated by 0. Lines
// starting with 'c' are comments.
NAEFormula parse_nae_formula(std::string_view text);
std::string format_nae_formula(const NAEFormula& f);

// Monotone copies of one original variable x with m = max(#positive, #negative)
// occurrences. Indices are variables of the monotone formula.
struct VariableFamily {
  std::size_t occurrences = 0;   // m; the family is empty when m = 0
  std::vector<std::size_t> pos;  // x_1 .. x_{m+1}
  std::vector<std::size_t> neg;  // x'_1 .. x'_m
  std::vector<std::size_t> z;    // Z_1 .. Z_{m+1}
  std::vector<std::size_t> z_neg;  // Z'_1 .. Z'_{m+1}
};

struct MonotoneFormula {
  NAEFormula formula;  // the first `original_clauses` clauses mirror the input
  std::size_t original_vars = 0;
  std::size_t original_clauses = 0;
  std::vector<VariableFamily> families;  // indexed by original variable
  std::vector<std::string> names;        // per monotone variable
};

// Replaces the i-th positive (negative) occurrence of x by x_i (x'_i) and adds
// eight consistency clauses per variable and index i = 1..m.
MonotoneFormula monotonize(const NAEFormula& f);

// Lifts an assignment of the input formula: x_i = x, x'_i = !x, Z = true,
// Z' = false.
Assignment lift_assignment(const MonotoneFormula& mf, const Assignment& original);

enum class ElementKind { Variable, Clause, Guard, Dummy };

struct ElementRole {
  ElementKind kind = ElementKind::Dummy;
  std::size_t index = 0;  // monotone variable, clause element, guard, or dummy number
  std::string name;
};

struct ReductionOutput {
  MonotoneFormula source;
  PermutationInstance instance;        // three linear orderings
  std::vector<ElementRole> roles;      // per item
  std::vector<Item> var_element;       // monotone variable -> item
  std::vector<Item> clause_element;    // c_1, c_2, ... (two per original clause)
  std::vector<Item> guard_element;
  std::vector<Item> dummy_element;     // in their common relative order
};

// Three orderings whose consecutive triples realize every clause of the
// monotone formula. Clause blocks c, u, v, w, c' and the Z chains live in the
// first ordering, the Z/x/x' chain in the second, the x/Z'/x' chain in the
// third. Chains in the second and third orderings are flanked by guard
// elements; every block is followed by a pair of dummies and elements not in
// a block are isolated between dummy pairs.
ReductionOutput reduce(const MonotoneFormula& mf);

// Colors a reduction from an NAE assignment of the monotone formula whose Z
// and Z' copies are opposite. Throws std::invalid_argument otherwise.
Coloring assignment_to_coloring(const ReductionOutput& r, const Assignment& monotone);

// Reads the input formula's variables off the x_1 copies of a coloring with
// no monochromatic consecutive triple. Throws std::invalid_argument if the
// coloring has such a triple.
Assignment coloring_to_assignment(const ReductionOutput& r, const Coloring& col);

}  // namespace polystrip
