#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "polystrip/constructions.hpp"
#include "polystrip/dual.hpp"
#include "polystrip/geometry.hpp"
#include "polystrip/hardness.hpp"
#include "polystrip/instance.hpp"
#include "polystrip/json_io.hpp"
#include "polystrip/lll.hpp"
#include "polystrip/oracle.hpp"
#include "polystrip/planar.hpp"

using namespace polystrip;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Options {
  std::string input;
  std::string output;
  std::string coloring;
  std::string csv;
  std::size_t k = 2;
  std::size_t d = 2;
  std::size_t n = 10;
  std::size_t p = 0;
  std::size_t t = 0;
  std::size_t extra = 0;
  std::uint64_t seed = 0;
  std::size_t max_rounds = 1'000'000;
  std::uint64_t max_nodes = 100'000'000;
  std::size_t jobs = 1;
  bool circular = false;
  bool primal = false;
  bool dual = false;
  std::string k_range = "2:4";
  std::string d_range = "2:3";
  std::string n_range = "50,100";
};

struct Result {
  int status = kOk;
  Json body;
  std::string text;  // printed to stdout in addition to JSON when non-empty
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json load(const std::string& path) {
  if (path.empty()) throw std::invalid_argument("missing -i input file");
  return read_json_file(path);
}

// Instance files may hold a bare instance or wrap it under "instance".
PermutationInstance load_instance(const std::string& path) {
  const Json j = load(path);
  return instance_from_json(j.contains("instance") ? j.at("instance") : j);
}

// Strip files may be bare or nested under "strips" (lower-bound output).
StripSet load_strips(const Json& j) {
  if (j.contains("strips") && j.at("strips").is_object()) return strips_from_json(j.at("strips"));
  return strips_from_json(j);
}

Json coloring_result(const Coloring& col, const VerificationReport& report) {
  Json j;
  j["coloring"] = to_json(col);
  j["report"] = to_json(report);
  return j;
}

Result self_verified(const PermutationInstance& inst, const Coloring& col, std::size_t p) {
  const auto report = verify_windows(inst, col, p);
  return {report.valid ? kOk : kVerifyFailed, coloring_result(col, report), {}};
}

// "a:b" inclusive range or "a,b,c" list.
std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  const auto colon = text.find(':');
  try {
    if (colon != std::string::npos) {
      const std::size_t lo = std::stoul(text.substr(0, colon));
      const std::size_t hi = std::stoul(text.substr(colon + 1));
      for (std::size_t x = lo; x <= hi; ++x) out.push_back(x);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stoul(item));
    }
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad range '" + text + "'");
  }
  if (out.empty()) throw std::invalid_argument("empty range '" + text + "'");
  return out;
}

Result cmd_bounds(const Options& o) {
  const auto b = bounds_table(o.k, o.d);
  const auto w = window_bound(o.k, o.d);
  Json j;
  j["k"] = b.k;
  j["d"] = b.d;
  j["p_upper"] = b.p_upper;
  j["p_circ_upper"] = b.p_circ_upper;
  j["p_dual_upper"] = b.p_dual_upper;
  j["lower"] = b.lower;
  j["t_formula"] = w.t_formula;
  j["t_min"] = w.t_min;
  std::ostringstream s;
  s << "p(" << o.k << "," << o.d << ") <= " << b.p_upper << "\n"
    << "p'(" << o.k << "," << o.d << ") <= " << b.p_circ_upper << "\n"
    << "pbar(" << o.k << "," << o.d << ") <= " << b.p_dual_upper << "\n"
    << "p(" << o.k << "," << o.d << ") >= " << b.lower << "\n";
  return {kOk, j, s.str()};
}

Result cmd_gen_instance(const Options& o) {
  return {kOk, to_json(gen_random_instance(o.seed, o.n, o.d, o.circular)), {}};
}

Result cmd_points(const Options& o) {
  return {kOk, to_json(points_to_instance(points_from_json(load(o.input)))), {}};
}

Result cmd_wedges(const Options& o) {
  const Json j = load(o.input);
  const auto ps = points_from_json(j);
  if (!j.contains("apices")) throw std::invalid_argument("missing JSON field 'apices'");
  std::vector<std::array<double, 2>> apices;
  try {
    apices = j.at("apices").get<std::vector<std::array<double, 2>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON field 'apices': ") + e.what());
  }
  return {kOk, to_json(wedges_to_instance(ps, apices)), {}};
}

Result cmd_color_planar(const Options& o) {
  const auto inst = load_instance(o.input);
  return self_verified(inst, color_planar(inst, o.k), 2 * o.k - 1);
}

Result cmd_color_circular(const Options& o) {
  const auto inst = load_instance(o.input);
  const auto cc = color_circular(inst, o.k);
  Result r = self_verified(inst, cc.coloring, std::min(cc.achieved_bound, inst.n()));
  r.body["achieved_bound"] = cc.achieved_bound;
  return r;
}

Result cmd_color_lll(const Options& o) {
  const auto inst = load_instance(o.input);
  LLLParams params;
  params.k = o.k;
  params.d = inst.d();
  params.t = o.t != 0 ? o.t : window_bound(o.k, inst.d()).t_min;
  params.seed = o.seed;
  params.max_rounds = o.max_rounds;
  const auto res = color_resample(inst, params);
  Result r = self_verified(inst, res.coloring, params.t);
  r.body["t"] = params.t;
  r.body["resamples"] = res.resamples;
  return r;
}

Result cmd_decide_p2(const Options& o) {
  const auto inst = load_instance(o.input);
  const auto col = decide_two_window(inst);
  Json j;
  j["colorable"] = col.has_value();
  if (!col) return {kOk, j, {}};
  const auto report = verify_windows(inst, *col, 2);
  j["coloring"] = to_json(*col);
  j["report"] = to_json(report);
  return {report.valid ? kOk : kVerifyFailed, j, {}};
}

Result cmd_color_intervals(const Options& o) {
  const Json j = load(o.input);
  if (!j.contains("intervals")) throw std::invalid_argument("missing JSON field 'intervals'");
  std::vector<Interval> ivs;
  StripSet as_strips{1, {}};
  for (const auto& iv : j.at("intervals")) {
    if (!iv.is_array() || iv.size() != 2) {
      throw std::invalid_argument("each interval must be [lo, hi]");
    }
    const double lo = iv[0].get<double>(), hi = iv[1].get<double>();
    ivs.push_back({lo, hi, ivs.size()});
    as_strips.strips.push_back({0, lo, hi});
  }
  const auto col = color_intervals(ivs, o.k);
  const auto report = verify_depth(as_strips, col, o.k);
  Json out;
  out["coloring"] = to_json(col);
  out["report"] = to_json(report);
  return {report.valid ? kOk : kVerifyFailed, out, {}};
}

Result cmd_color_strips(const Options& o) {
  const auto ss = load_strips(load(o.input));
  const auto col = color_strips(ss, o.k);
  const auto report = verify_depth(ss, col, ss.d * (o.k - 1) + 1);
  Json out;
  out["coloring"] = to_json(col);
  out["report"] = to_json(report);
  return {report.valid ? kOk : kVerifyFailed, out, {}};
}

Result cmd_lower_bound(const Options& o) {
  if (o.primal == o.dual) throw std::invalid_argument("pass exactly one of --primal, --dual");
  auto lb = o.primal ? primal_lower_bound(o.k, o.d) : dual_lower_bound(o.k, o.d);
  if (o.extra > 0) lb = enlarge_instance(lb, o.extra);
  return {kOk, to_json(lb), {}};
}

Result cmd_reduce_nae(const Options& o) {
  if (o.input.empty()) throw std::invalid_argument("missing -i formula file");
  const auto f = parse_nae_formula(slurp(o.input));
  return {kOk, to_json(reduce(monotonize(f))), {}};
}

Result cmd_solve_triples(const Options& o) {
  const auto inst = load_instance(o.input);
  const auto col = solve_triples(inst, SearchBudget{o.max_nodes});
  Json j;
  j["found"] = col.has_value();
  if (!col) return {kOk, j, {}};
  const auto report = verify_windows(inst, *col, std::min<std::size_t>(3, inst.n()));
  j["coloring"] = to_json(*col);
  j["report"] = to_json(report);
  return {report.valid ? kOk : kVerifyFailed, j, {}};
}

Result cmd_oracle(const Options& o) {
  const auto inst = load_instance(o.input);
  const SearchBudget budget{o.max_nodes};
  Json j;
  j["k"] = o.k;
  if (o.p == 0) {
    j["min_window"] = min_achievable_window(inst, o.k, budget);
    return {kOk, j, {}};
  }
  j["p"] = o.p;
  const auto col = exhaustive_best_coloring(inst, o.k, o.p, budget);
  j["found"] = col.has_value();
  if (!col) return {kOk, j, {}};
  const auto report = verify_windows(inst, *col, o.p);
  j["coloring"] = to_json(*col);
  j["report"] = to_json(report);
  return {report.valid ? kOk : kVerifyFailed, j, {}};
}

Result cmd_verify(const Options& o) {
  if (o.p == 0) throw std::invalid_argument("verify needs --p >= 1");
  if (o.coloring.empty()) throw std::invalid_argument("verify needs -c coloring file");
  const Json input = load(o.input);
  Json cj = read_json_file(o.coloring);
  if (cj.contains("coloring")) cj = cj.at("coloring");
  const Coloring col = coloring_from_json(cj);
  if (input.contains("strips")) {
    const auto ss = load_strips(input);
    const auto report = verify_depth(ss, col, o.p);
    return {report.valid ? kOk : kVerifyFailed, to_json(report), {}};
  }
  const auto inst = instance_from_json(input.contains("instance") ? input.at("instance") : input);
  const auto report = verify_windows(inst, col, o.p);
  return {report.valid ? kOk : kVerifyFailed, to_json(report), {}};
}

struct SweepRow {
  std::size_t k, d, n;
  std::uint64_t seed;
  std::string method;
  std::size_t window = 0;
  std::size_t min_window = 0;
  bool valid = false;
  std::string error;
};

SweepRow sweep_cell(std::size_t k, std::size_t d, std::size_t n, std::uint64_t seed,
                    const Options& o) {
  SweepRow row{k, d, n, seed, d == 2 ? "planar" : "resample", 0, 0, false, {}};
  try {
    const auto inst = gen_random_instance(seed, n, d, false);
    Coloring col(1, std::vector<Color>(n, 0));
    if (d == 2) {
      col = color_planar(inst, k);
      row.window = 2 * k - 1;
    } else {
      LLLParams params{k, d, window_bound(k, d).t_min, seed, o.max_rounds};
      row.window = params.t;
      col = color_resample(inst, params).coloring;
    }
    row.valid = verify_windows(inst, col, row.window).valid;
    row.min_window = min_polychromatic_window(inst, col).size;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

Result cmd_sweep(const Options& o) {
  struct Cell {
    std::size_t k, d, n;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (std::size_t d : parse_list(o.d_range)) {
    for (std::size_t k : parse_list(o.k_range)) {
      for (std::size_t n : parse_list(o.n_range)) {
        // Per-cell seed depends only on the cell, never on scheduling.
        const std::uint64_t seed = o.seed * 1'000'003ULL + d * 10'007ULL + k * 101ULL + n;
        cells.push_back({k, d, n, seed});
      }
    }
  }
  std::vector<SweepRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      rows[i] = sweep_cell(cells[i].k, cells[i].d, cells[i].n, cells[i].seed, o);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < std::max<std::size_t>(o.jobs, 1); ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  Json arr = Json::array();
  bool all_valid = true;
  std::ostringstream csv;
  csv << "k,d,n,seed,method,window,min_window,valid,error\n";
  for (const auto& r : rows) {
    all_valid = all_valid && r.valid;
    arr.push_back({{"k", r.k},
                   {"d", r.d},
                   {"n", r.n},
                   {"seed", r.seed},
                   {"method", r.method},
                   {"window", r.window},
                   {"min_window", r.min_window},
                   {"valid", r.valid},
                   {"error", r.error}});
    csv << r.k << ',' << r.d << ',' << r.n << ',' << r.seed << ',' << r.method << ','
        << r.window << ',' << r.min_window << ',' << (r.valid ? "true" : "false") << ",\""
        << r.error << "\"\n";
  }
  if (!o.csv.empty()) {
    std::ofstream out(o.csv);
    if (!out) throw std::runtime_error("cannot write " + o.csv);
    out << csv.str();
  }
  Json j;
  j["cells"] = std::move(arr);
  return {all_valid ? kOk : kVerifyFailed, j, {}};
}

// Parameters the user actually set on this subcommand, in declaration order.
Json recorded_parameters(const CLI::App* sub) {
  Json params = Json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string name = opt->get_name();
    name.erase(0, name.find_first_not_of('-'));
    const auto& res = opt->results();
    if (opt->get_expected_min() == 0) {
      params[name] = true;
    } else {
      params[name] = res.size() == 1 ? Json(res.front()) : Json(res);
    }
  }
  return params;
}

int emit(const Result& r, const std::string& sub, const Json& params,
         const std::vector<std::string>& args, const Options& o) {
  if (!r.text.empty()) std::cout << r.text;
  if (o.output.empty()) {
    if (r.text.empty()) std::cout << r.body.dump(2) << '\n';
    return r.status;
  }
  write_json_file(o.output, r.body);
  Json m;
  m["subcommand"] = sub;
  m["parameters"] = params;
  m["argv"] = args;
  m["input"] = o.input;
  m["output"] = o.output;
  m["seed"] = o.seed;
  m["exit_status"] = r.status;
  m["version"] = "0.1.0";
  write_json_file(o.output + ".manifest.json", m);
  return r.status;
}

int dispatch(std::vector<std::string> args);

int cmd_replay(const std::string& manifest) {
  const Json m = read_json_file(manifest);
  if (!m.contains("argv")) throw std::invalid_argument("manifest has no 'argv'");
  return dispatch(m.at("argv").get<std::vector<std::string>>());
}

int dispatch(std::vector<std::string> args) {
  CLI::App app{"Polychromatic colorings of permutation, strip, and wedge instances"};
  app.require_subcommand(1);
  Options o;
  std::string manifest;

  auto add_io = [&](CLI::App* s) {
    s->add_option("-i,--input", o.input, "input file");
    s->add_option("-o,--output", o.output, "output JSON (a .manifest.json is written beside it)");
  };
  auto add_k = [&](CLI::App* s) {
    s->add_option("--k", o.k, "number of colors")->check(CLI::PositiveNumber);
  };

  struct Entry {
    CLI::App* app;
    std::function<Result(const Options&)> run;
  };
  std::vector<Entry> entries;
  auto sub = [&](const std::string& name, const std::string& help,
                 std::function<Result(const Options&)> fn) {
    CLI::App* s = app.add_subcommand(name, help);
    entries.push_back({s, std::move(fn)});
    return s;
  };

  auto* bounds = sub("bounds", "upper and lower window bounds for (k, d)", cmd_bounds);
  add_k(bounds);
  bounds->add_option("--d", o.d, "dimension")->check(CLI::PositiveNumber);
  bounds->add_option("-o,--output", o.output);

  auto* gen = sub("gen-instance", "seeded random permutation instance", cmd_gen_instance);
  gen->add_option("--n", o.n, "item count")->check(CLI::PositiveNumber);
  gen->add_option("--d", o.d, "number of orderings")->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed);
  gen->add_flag("--circular", o.circular);
  gen->add_option("-o,--output", o.output);

  add_io(sub("points-to-instance", "orderings of a point set along each axis", cmd_points));
  add_io(sub("wedges-to-instance", "circular angular orderings around apices", cmd_wedges));

  auto* planar = sub("color-planar", "two linear orderings, window 2k-1", cmd_color_planar);
  add_io(planar);
  add_k(planar);
  auto* circ = sub("color-circular", "two circular orderings, window <= 2k", cmd_color_circular);
  add_io(circ);
  add_k(circ);
  auto* lll = sub("color-lll", "random resampling at window t", cmd_color_lll);
  add_io(lll);
  add_k(lll);
  lll->add_option("--t", o.t, "window size (default: smallest t meeting the condition)");
  lll->add_option("--seed", o.seed);
  lll->add_option("--max-rounds", o.max_rounds)->check(CLI::PositiveNumber);

  add_io(sub("decide-p2", "two colors, window 2", cmd_decide_p2));

  auto* ci = sub("color-intervals", "intervals: every j-deep point sees min(j,k) colors",
                 cmd_color_intervals);
  add_io(ci);
  add_k(ci);
  auto* cs = sub("color-strips", "axis-parallel strips at depth d(k-1)+1", cmd_color_strips);
  add_io(cs);
  add_k(cs);

  auto* lb = sub("gen-lower-bound", "primal or dual lower-bound construction", cmd_lower_bound);
  add_k(lb);
  lb->add_option("--d", o.d)->check(CLI::PositiveNumber);
  lb->add_flag("--primal", o.primal);
  lb->add_flag("--dual", o.dual);
  lb->add_option("--extra", o.extra, "extra padding items or strips");
  lb->add_option("-o,--output", o.output);

  add_io(sub("reduce-nae", "NAE-3SAT formula to three orderings", cmd_reduce_nae));

  auto* st = sub("solve-triples", "two colors, no monochromatic consecutive triple",
                 cmd_solve_triples);
  add_io(st);
  st->add_option("--max-nodes", o.max_nodes)->check(CLI::PositiveNumber);

  auto* orc = sub("oracle", "exhaustive search (min window, or lex-first coloring with --p)",
                  cmd_oracle);
  add_io(orc);
  add_k(orc);
  orc->add_option("--p", o.p);
  orc->add_option("--max-nodes", o.max_nodes)->check(CLI::PositiveNumber);

  auto* ver = sub("verify", "check a coloring at window (or depth) p", cmd_verify);
  add_io(ver);
  ver->add_option("-c,--coloring", o.coloring, "coloring JSON")->required();
  ver->add_option("--p", o.p)->required();

  auto* sw = sub("sweep", "batch over (k, d, n) grids", cmd_sweep);
  sw->add_option("--k", o.k_range, "k values, a:b or a,b,c");
  sw->add_option("--d", o.d_range, "d values");
  sw->add_option("--n", o.n_range, "n values");
  sw->add_option("--seed", o.seed);
  sw->add_option("--max-rounds", o.max_rounds)->check(CLI::PositiveNumber);
  sw->add_option("--csv", o.csv, "CSV summary path");
  sw->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  sw->add_option("-o,--output", o.output);

  auto* rp = app.add_subcommand("replay", "re-run the command recorded in a manifest");
  rp->add_option("manifest", manifest)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (rp->parsed()) return cmd_replay(manifest);
    for (const auto& e : entries) {
      if (e.app->parsed()) {
        const Result r = e.run(o);
        return emit(r, e.app->get_name(), recorded_parameters(e.app), args, o);
      }
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(std::move(args));
}
