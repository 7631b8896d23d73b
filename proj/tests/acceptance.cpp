// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polystrip/constructions.hpp"
#include "polystrip/dual.hpp"
#include "polystrip/hardness.hpp"
#include "polystrip/instance.hpp"
#include "polystrip/lll.hpp"
#include "polystrip/oracle.hpp"
#include "polystrip/planar.hpp"
#include "polystrip/rng.hpp"

using namespace polystrip;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(const std::string& name, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!out.pass) ++failures;
  std::printf("%s %s (%.2fs): %s\n", out.pass ? "PASS" : "FAIL", name.c_str(), secs,
              out.detail.c_str());
  std::fflush(stdout);
}

std::size_t in_range(Rng& rng, std::size_t lo, std::size_t hi) { return lo + rng.below(hi - lo + 1); }

Outcome planar_at_scale() {
  Rng rng(1001);
  std::size_t ok = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = in_range(rng, 1, 12);
    const std::size_t n = in_range(rng, k, 300);
    const auto inst = gen_random_instance(rng.below(1u << 30), n, 2, false);
    if (verify_windows(inst, color_planar(inst, k), 2 * k - 1).valid) ++ok;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream s;
  s << ok << "/200 instances valid at 2k-1, " << secs << "s (limit 10s)";
  return {ok == 200 && secs < 10.0, s.str()};
}

Outcome p22() {
  const auto lb = primal_lower_bound(2, 2);
  const std::size_t best = min_achievable_window(*lb.primal, 2);
  const bool planar3 = verify_windows(*lb.primal, color_planar(*lb.primal, 2), 3).valid;
  std::ostringstream s;
  s << "min achievable window " << best << ", planar coloring valid at 3: "
    << (planar3 ? "yes" : "no");
  return {best == 3 && planar3, s.str()};
}

Outcome circular_groups() {
  Rng rng(1003);
  std::size_t total = 0, ok = 0, divisible = 0, divisible_ok = 0;
  for (std::size_t k = 2; k <= 8; ++k) {
    for (int i = 0; i < 30; ++i) {
      const std::size_t lo = std::max(k * (k - 1), k);
      std::size_t n = in_range(rng, lo, lo + 80);
      if (i % 3 == 0) n = k * (n / k);  // force k | n on a third of the cells
      if (n < lo) n += k;
      const auto inst = gen_random_instance(rng.below(1u << 30), n, 2, true);
      const auto res = color_circular(inst, k);
      ++total;
      if (verify_windows(inst, res.coloring, std::min(2 * k, n)).valid) ++ok;
      if (n % k == 0) {
        ++divisible;
        if (verify_windows(inst, res.coloring, std::min(2 * k - 1, n)).valid) ++divisible_ok;
      }
    }
  }
  std::ostringstream s;
  s << ok << "/" << total << " valid at 2k, " << divisible_ok << "/" << divisible
    << " with k|n valid at 2k-1";
  return {ok == total && divisible_ok == divisible && divisible > 0, s.str()};
}

Outcome resampling() {
  std::ostringstream s;
  bool pass = condition_holds(2, 2, 10) && !condition_holds(2, 2, 7);
  s << "condition(2,2,10)=" << condition_holds(2, 2, 10)
    << " condition(2,2,7)=" << condition_holds(2, 2, 7);
  Rng rng(1004);
  for (std::size_t d : {2, 3}) {
    for (std::size_t k : {2, 3}) {
      const std::size_t t = window_bound(k, d).t_min;
      std::size_t ok = 0, bad = 0;
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = in_range(rng, t, 120);
        const auto inst = gen_random_instance(rng.below(1u << 30), n, d, false);
        LLLParams params{k, d, t, seed};
        try {
          const auto r = color_resample(inst, params);
          if (verify_windows(inst, r.coloring, t).valid) ++ok;
          else ++bad;
        } catch (const BudgetExceeded&) {
        }
      }
      s << "; d=" << d << " k=" << k << " t=" << t << ": " << ok << "/100";
      pass = pass && ok >= 99 && bad == 0;
    }
  }
  return {pass, s.str()};
}

Outcome interval_strong_property() {
  Rng rng(1005);
  std::size_t bad_sets = 0, samples = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t m = in_range(rng, 1, 200);
    const std::size_t k = in_range(rng, 1, 6);
    const std::size_t grid = in_range(rng, 10, 400);
    std::vector<Interval> ivs;
    for (std::size_t j = 0; j < m; ++j) {
      const auto a = static_cast<double>(rng.below(grid));
      ivs.push_back({a, a + static_cast<double>(1 + rng.below(grid / 4 + 1)), j});
    }
    const auto col = color_intervals(ivs, k);
    // Integer endpoints: half-integer steps visit every cell.
    bool ok = true;
    const double end = static_cast<double>(grid + grid / 4 + 2);
    for (double x = -1.0; x <= end; x += 0.5) {
      ++samples;
      std::size_t depth = 0;
      std::set<Color> seen;
      for (std::size_t j = 0; j < m; ++j) {
        if (ivs[j].lo <= x && x <= ivs[j].hi) {
          ++depth;
          seen.insert(col[j]);
        }
      }
      if (seen.size() != std::min(depth, k)) ok = false;
    }
    if (!ok) ++bad_sets;
  }
  std::ostringstream s;
  s << 200 - bad_sets << "/200 interval sets satisfy min(j,k) at " << samples << " sample points";
  return {bad_sets == 0, s.str()};
}

Outcome dual_upper() {
  Rng rng(1006);
  std::size_t total = 0, ok = 0;
  for (std::size_t d : {2, 3}) {
    for (std::size_t k = 1; k <= 5; ++k) {
      for (int i = 0; i < 20; ++i) {
        StripSet ss{d, {}};
        const std::size_t m = in_range(rng, 1, d == 2 ? 40 : 25);
        for (std::size_t j = 0; j < m; ++j) {
          const auto a = static_cast<double>(rng.below(20));
          ss.strips.push_back({rng.below(d), a, a + static_cast<double>(1 + rng.below(10))});
        }
        ++total;
        if (verify_depth(ss, color_strips(ss, k), d * (k - 1) + 1).valid) ++ok;
      }
    }
  }
  std::ostringstream s;
  s << ok << "/" << total << " strip sets valid at depth d(k-1)+1";
  return {ok == total, s.str()};
}

Outcome lower_bound_soundness() {
  std::ostringstream s;
  bool pass = true;
  const std::vector<std::pair<std::size_t, std::size_t>> cases{{2, 2}, {2, 3}, {3, 2}, {2, 4}};
  for (const auto& [d, k] : cases) {
    const auto lb = primal_lower_bound(k, d);
    const std::size_t best = min_achievable_window(*lb.primal, k);
    const bool ok = best > 2 * lb.cluster;
    pass = pass && ok;
    s << "(d=" << d << ",k=" << k << ") s=" << lb.cluster << " min=" << best
      << (ok ? " ok" : " NOT > 2s") << "; ";
  }
  const auto dual = dual_lower_bound(2, 2);
  std::size_t valid = 0;
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    std::vector<Color> c(4);
    for (std::size_t i = 0; i < 4; ++i) c[i] = (mask >> i) & 1u;
    if (verify_depth(*dual.dual, Coloring(2, c), 2).valid) ++valid;
  }
  s << "dual (2,2): " << valid << "/16 colorings valid at depth 2";
  return {pass && valid == 0, s.str()};
}

Outcome hardness_equivalence() {
  // Deterministic family: every clause list over 1..3 variables drawn from a
  // seeded stream, plus hand-picked edge cases.
  std::vector<NAEFormula> family;
  auto L = [](std::size_t v, bool p) { return Literal{v, p}; };
  family.push_back({1, {{L(0, true), L(0, true), L(0, true)}}});
  family.push_back({1, {{L(0, true), L(0, false), L(0, true)}}});
  family.push_back({2, {{L(0, true), L(0, false), L(1, true)}}});
  family.push_back({3, {{L(0, true), L(1, true), L(2, true)}}});
  family.push_back({2, {{L(0, true), L(1, true), L(1, true)}, {L(0, false), L(1, false), L(1, true)}}});
  Rng rng(1008);
  while (family.size() < 80) {
    NAEFormula f{in_range(rng, 1, 3), {}};
    for (std::size_t c = 0, nc = in_range(rng, 1, 3); c < nc; ++c) {
      Clause cl;
      for (auto& l : cl) l = {rng.below(f.num_vars), rng.below(2) == 0};
      f.clauses.push_back(cl);
    }
    family.push_back(f);
  }
  std::size_t agree = 0, sat = 0, verified = 0, mixed = 0;
  for (const auto& f : family) {
    bool has_pos = false, has_neg = false;
    for (const auto& c : f.clauses) {
      for (const auto& l : c) (l.positive ? has_pos : has_neg) = true;
    }
    if (has_pos && has_neg) ++mixed;
    const auto a = nae_brute_force(f);
    const auto mf = monotonize(f);
    const auto r = reduce(mf);
    const auto col = solve_triples(r.instance);
    if (a.has_value() == col.has_value()) ++agree;
    if (a) {
      ++sat;
      const auto lifted = assignment_to_coloring(r, lift_assignment(mf, *a));
      if (verify_windows(r.instance, lifted, 3).valid) ++verified;
    }
  }
  std::ostringstream s;
  s << agree << "/" << family.size() << " formulas agree (" << sat << " satisfiable, " << mixed
    << " mixed polarity), " << verified << "/" << sat << " lifted colorings triple-free";
  return {agree == family.size() && verified == sat && family.size() >= 50 && sat > 0 &&
              sat < family.size(),
          s.str()};
}

Outcome edge_coloring() {
  Rng rng(1009);
  std::size_t total = 0, ok = 0;
  for (std::size_t k = 1; k <= 10; ++k) {
    for (int i = 0; i < 30; ++i) {
      const std::size_t m = k * in_range(rng, 1, 30);
      const auto inst = gen_random_instance(rng.below(1u << 30), m, 2, false);
      const auto g = build_tuple_multigraph(inst.perm(0), inst.perm(1), k);
      const auto ec = edge_color_regular_bipartite(g);
      // Each color class must touch every vertex on both sides exactly once.
      bool good = ec.color.size() == g.edges.size();
      const std::size_t verts = g.left.size();
      for (Color c = 0; c < k && good; ++c) {
        std::vector<int> l(verts, 0), r(verts, 0);
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
          if (ec.color[e] != c) continue;
          ++l[g.edges[e].left];
          ++r[g.edges[e].right];
        }
        for (std::size_t v = 0; v < verts; ++v) good = good && l[v] == 1 && r[v] == 1;
      }
      ++total;
      if (good) ++ok;
    }
  }
  std::ostringstream s;
  s << ok << "/" << total << " multigraphs split into k perfect matchings";
  return {ok == total, s.str()};
}

Outcome hamiltonian() {
  std::size_t ok = 0;
  for (std::size_t h = 1; h <= 8; ++h) {
    const auto dec = ham_path_decomposition(h);
    const std::size_t m = 2 * h;
    std::vector<std::vector<int>> used(m, std::vector<int>(m, 0));
    bool good = dec.paths.size() == h;
    for (const auto& p : dec.paths) {
      good = good && p.size() == m && std::set<std::size_t>(p.begin(), p.end()).size() == m;
      for (std::size_t i = 1; i < p.size(); ++i) {
        ++used[p[i - 1]][p[i]];
        ++used[p[i]][p[i - 1]];
      }
    }
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) good = good && (a == b || used[a][b] == 1);
    }
    if (good) ++ok;
  }
  std::ostringstream s;
  s << ok << "/8 decompositions cover every edge of K_2h exactly once";
  return {ok == 8, s.str()};
}

}  // namespace

int main() {
  run("planar-2k-1-at-scale", planar_at_scale);
  run("p22-equals-3", p22);
  run("circular-2k", circular_groups);
  run("resampling-t_min", resampling);
  run("interval-strong-property", interval_strong_property);
  run("dual-upper-bound", dual_upper);
  run("lower-bound-soundness", lower_bound_soundness);
  run("hardness-equivalence", hardness_equivalence);
  run("edge-coloring-matchings", edge_coloring);
  run("hamiltonian-decompositions", hamiltonian);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
