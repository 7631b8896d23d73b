#include <algorithm>
#include <optional>
#include <set>

#include "doctest.h"
#include "polystrip/hardness.hpp"
#include "polystrip/json_io.hpp"
#include "polystrip/oracle.hpp"
#include "support.hpp"

using namespace polystrip;
using namespace polystrip::testing;

namespace {

NAEFormula formula(std::size_t vars, std::vector<Clause> clauses) {
  return NAEFormula{vars, std::move(clauses)};
}

Literal pos(std::size_t v) { return {v, true}; }
Literal neg(std::size_t v) { return {v, false}; }

// Bitmask enumeration, independent of the library's is_nae.
std::vector<Assignment> all_nae(const NAEFormula& f) {
  REQUIRE(f.num_vars <= 20);
  std::vector<Assignment> out;
  for (std::uint32_t mask = 0; mask < (1u << f.num_vars); ++mask) {
    bool ok = true;
    for (const auto& c : f.clauses) {
      int trues = 0;
      for (const auto& l : c) trues += (((mask >> l.var) & 1u) == 1u) == l.positive ? 1 : 0;
      if (trues == 0 || trues == 3) ok = false;
    }
    if (!ok) continue;
    Assignment a(f.num_vars);
    for (std::size_t v = 0; v < f.num_vars; ++v) a[v] = ((mask >> v) & 1u) == 1u;
    out.push_back(a);
  }
  return out;
}

bool consecutive_somewhere(const ReductionOutput& r, const Clause& c) {
  const std::set<Item> want{r.var_element[c[0].var], r.var_element[c[1].var],
                            r.var_element[c[2].var]};
  for (const auto& perm : r.instance.perms()) {
    for (std::size_t s = 0; s + 3 <= perm.size(); ++s) {
      if (std::set<Item>{perm[s], perm[s + 1], perm[s + 2]} == want) return true;
    }
  }
  return false;
}

const NAEFormula kXYZ = formula(3, {{pos(0), pos(1), pos(2)}});
const NAEFormula kXXX = formula(1, {{pos(0), pos(0), pos(0)}});

}  // namespace

TEST_CASE("monotonize examples") {
  const auto mf = monotonize(kXYZ);
  CHECK(mf.formula.clauses.size() == 25);
  CHECK(mf.formula.is_monotone());
  CHECK(mf.formula.clauses[0] ==
        Clause{pos(mf.families[0].pos[0]), pos(mf.families[1].pos[0]), pos(mf.families[2].pos[0])});
  CHECK(mf.names[mf.families[0].z_neg[1]] == "Z'^x1_2");

  SUBCASE("(x, not x, y) forces x_1 != x'_1") {
    const auto mixed = monotonize(formula(2, {{pos(0), neg(0), pos(1)}}));
    const auto& fx = mixed.families[0];
    CHECK(mixed.formula.clauses[0] ==
          Clause{pos(fx.pos[0]), pos(fx.neg[0]), pos(mixed.families[1].pos[0])});
    const auto sols = all_nae(mixed.formula);
    CHECK_FALSE(sols.empty());
    for (const auto& a : sols) CHECK(a[fx.pos[0]] != a[fx.neg[0]]);
  }
  SUBCASE("(x, x, x) is unsatisfiable on both sides") {
    const auto mxxx = monotonize(kXXX);
    CHECK(mxxx.formula.clauses[0] == Clause{pos(mxxx.families[0].pos[0]),
                                            pos(mxxx.families[0].pos[1]),
                                            pos(mxxx.families[0].pos[2])});
    CHECK(all_nae(kXXX).empty());
    CHECK(all_nae(mxxx.formula).empty());
  }
  SUBCASE("lifted assignments are NAE") {
    for (const auto& a : all_nae(kXYZ)) CHECK(is_nae(mf.formula, lift_assignment(mf, a)));
  }
}

TEST_CASE("property: monotonization preserves NAE satisfiability") {
  Rng rng(53);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 120; ++trial) {
    const std::size_t vars = 1 + rng.below(3);
    const std::size_t nclauses = 1 + rng.below(2);
    NAEFormula f{vars, {}};
    for (std::size_t c = 0; c < nclauses; ++c) {
      Clause cl;
      for (auto& l : cl) l = {rng.below(vars), rng.below(2) == 0};
      f.clauses.push_back(cl);
    }
    const auto mf = monotonize(f);
    if (mf.formula.num_vars > 20) continue;
    ++checked;
    CHECK(all_nae(f).empty() == all_nae(mf.formula).empty());
  }
  CHECK(checked >= 50);
}

TEST_CASE("reduce layout") {
  const auto mf = monotonize(kXYZ);
  const auto r = reduce(mf);
  CHECK(r.instance.d() == 3);
  CHECK_FALSE(r.instance.circular());
  const auto& p1 = r.instance.perm(0);
  const auto& c = mf.formula.clauses[0];
  CHECK(p1[0] == r.clause_element[0]);
  CHECK(p1[1] == r.var_element[c[0].var]);
  CHECK(p1[2] == r.var_element[c[1].var]);
  CHECK(p1[3] == r.var_element[c[2].var]);
  CHECK(p1[4] == r.clause_element[1]);
  CHECK(r.roles[p1[5]].kind == ElementKind::Dummy);
  CHECK(r.roles[p1[6]].kind == ElementKind::Dummy);

  // Dummies appear in the same relative order in every ordering.
  for (const auto& perm : r.instance.perms()) {
    std::vector<Item> seen;
    for (Item x : perm) {
      if (r.roles[x].kind == ElementKind::Dummy) seen.push_back(x);
    }
    CHECK(seen == r.dummy_element);
  }
  MonotoneFormula not_monotone;
  not_monotone.formula = formula(1, {{neg(0), pos(0), pos(0)}});
  CHECK_THROWS_AS(reduce(not_monotone), std::invalid_argument);
  CHECK(to_json(r).contains("var_map"));
}

TEST_CASE("property: every clause is a consecutive triple") {
  Rng rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t vars = 1 + rng.below(3);
    NAEFormula f{vars, {}};
    for (std::size_t c = 0, nc = 1 + rng.below(3); c < nc; ++c) {
      Clause cl;
      for (auto& l : cl) l = {rng.below(vars), rng.below(2) == 0};
      f.clauses.push_back(cl);
    }
    const auto r = reduce(monotonize(f));
    for (const auto& cl : r.source.formula.clauses) CHECK(consecutive_somewhere(r, cl));
  }
}

TEST_CASE("assignment_to_coloring and back") {
  const auto mf = monotonize(kXYZ);
  const auto r = reduce(mf);

  const Assignment tft{true, false, true};
  const auto col = assignment_to_coloring(r, lift_assignment(mf, tft));
  CHECK(naive_windows_ok(r.instance, col, 3));
  for (std::size_t i = 0; i < r.dummy_element.size(); ++i) {
    CHECK(col[r.dummy_element[i]] == i % 2);
  }
  // Dummy pairs are consecutive in every ordering, so they read 0,1.
  for (const auto& perm : r.instance.perms()) {
    for (std::size_t s = 0; s + 1 < perm.size(); ++s) {
      if (r.roles[perm[s]].kind == ElementKind::Dummy &&
          r.roles[perm[s + 1]].kind == ElementKind::Dummy && r.roles[perm[s]].index % 2 == 0) {
        CHECK(col[perm[s]] == 0);
        CHECK(col[perm[s + 1]] == 1);
      }
    }
  }
  CHECK(coloring_to_assignment(r, col) == tft);

  for (const auto& a : all_nae(kXYZ)) {
    CHECK(coloring_to_assignment(r, assignment_to_coloring(r, lift_assignment(mf, a))) == a);
  }

  const Assignment ttt{true, true, true};
  CHECK_THROWS_AS(assignment_to_coloring(r, lift_assignment(mf, ttt)), std::invalid_argument);

  auto same_z = lift_assignment(mf, tft);
  same_z[mf.families[0].z_neg[0]] = true;
  CHECK_THROWS_AS(assignment_to_coloring(r, same_z), std::invalid_argument);

  CHECK_THROWS_AS(coloring_to_assignment(r, Coloring(2, std::vector<Color>(r.instance.n(), 0))),
                  std::invalid_argument);
}

TEST_CASE("colorings of the reduced instance decode to NAE assignments") {
  const auto r = reduce(monotonize(kXYZ));
  const auto col = solve_triples(r.instance);
  REQUIRE(col);
  CHECK(naive_windows_ok(r.instance, *col, 3));
  const auto a = coloring_to_assignment(r, *col);
  const auto sols = all_nae(kXYZ);
  CHECK(std::find(sols.begin(), sols.end(), a) != sols.end());

  CHECK_FALSE(solve_triples(reduce(monotonize(kXXX)).instance));
}

TEST_CASE("NAE text format") {
  const auto f = parse_nae_formula("c demo\np nae3 3 2\n1 -2 3 0\n2 2 -3\n");
  CHECK(f.num_vars == 3);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0] == Clause{pos(0), neg(1), pos(2)});
  CHECK(f.clauses[1] == Clause{pos(1), pos(1), neg(2)});
  CHECK(format_nae_formula(f) == "p nae3 3 2\n1 -2 3 0\n2 2 -3 0\n");
  CHECK(parse_nae_formula(format_nae_formula(f)).clauses == f.clauses);
  CHECK(parse_nae_formula("p nae3 0 0\n").clauses.empty());

  CHECK_THROWS_AS(parse_nae_formula("1 2 3 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_nae_formula("p nae3 2 1\n1 2 3 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_nae_formula("p nae3 3 1\n1 2 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_nae_formula("p nae3 3 2\n1 2 3 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_nae_formula("p cnf 3 1\n1 2 3 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_nae_formula("p nae3 3 1\n1 x 3 0\n"), std::invalid_argument);

  CHECK(is_nae(kXYZ, {false, false, true}));
  CHECK_FALSE(is_nae(kXYZ, {true, true, true}));
  CHECK_THROWS_AS(is_nae(kXYZ, {true}), std::invalid_argument);
  CHECK_THROWS_AS(monotonize(formula(1, {{pos(0), pos(1), pos(0)}})), std::invalid_argument);
}
