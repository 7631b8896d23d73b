#include "polystrip/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polystrip {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing JSON field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON field '") + key + "': " + e.what());
  }
}

const char* kind_name(ElementKind kind) {
  switch (kind) {
    case ElementKind::Variable: return "variable";
    case ElementKind::Clause: return "clause";
    case ElementKind::Guard: return "guard";
    case ElementKind::Dummy: return "dummy";
  }
  return "unknown";
}

}  // namespace

Json to_json(const PermutationInstance& inst) {
  Json j;
  j["n"] = inst.n();
  j["d"] = inst.d();
  j["circular"] = inst.circular();
  j["perms"] = inst.perms();
  return j;
}

Json to_json(const Coloring& col) {
  Json j;
  j["k"] = col.k;
  j["colors"] = col.colors;
  return j;
}

Json to_json(const VerificationReport& report) {
  Json j;
  j["valid"] = report.valid;
  j["window"] = report.window;
  j["min_window"] = report.min_window;
  j["missing_color"] = report.missing_color;
  Json v = Json::array();
  for (const auto& w : report.violations) v.push_back({w.perm, w.start, w.length});
  j["violations"] = std::move(v);
  return j;
}

Json to_json(const PointSet& ps) {
  Json j;
  j["d"] = ps.d;
  j["points"] = ps.points;
  return j;
}

Json to_json(const StripSet& ss) {
  Json j;
  j["d"] = ss.d;
  Json arr = Json::array();
  for (const auto& s : ss.strips) arr.push_back({{"axis", s.axis}, {"lo", s.lo}, {"hi", s.hi}});
  j["strips"] = std::move(arr);
  return j;
}

Json to_json(const DepthReport& report) {
  Json j;
  j["valid"] = report.valid;
  j["threshold"] = report.threshold;
  j["candidates"] = report.candidates;
  Json w = Json::array();
  for (const auto& x : report.witnesses) {
    w.push_back({{"point", x.point}, {"depth", x.depth}, {"colors", x.colors}});
  }
  j["witnesses"] = std::move(w);
  return j;
}

Json to_json(const TupleMultigraph& g) {
  Json j;
  j["left"] = g.left;
  j["right"] = g.right;
  Json e = Json::array();
  for (const auto& edge : g.edges) e.push_back({edge.left, edge.right, edge.item});
  j["edges"] = std::move(e);
  return j;
}

Json to_json(const LowerBoundInstance& lb) {
  Json j;
  j["k"] = lb.k;
  j["d"] = lb.d;
  j["cluster_size"] = lb.cluster;
  j["claimed_bound"] = lb.claimed_bound;
  j["clusters"] = lb.clusters;
  if (lb.primal) j["instance"] = to_json(*lb.primal);
  if (lb.dual) {
    j["strips"] = to_json(*lb.dual);
    Json w = Json::array();
    for (const auto& x : lb.witnesses) {
      w.push_back({{"clusters", {x.a, x.b}}, {"point", x.point}});
    }
    j["witnesses"] = std::move(w);
  }
  return j;
}

Json to_json(const ReductionOutput& r) {
  Json j;
  j["instance"] = to_json(r.instance);
  Json roles = Json::array();
  for (const auto& role : r.roles) {
    roles.push_back({{"kind", kind_name(role.kind)}, {"index", role.index}, {"name", role.name}});
  }
  j["roles"] = std::move(roles);
  j["var_element"] = r.var_element;
  j["monotone_formula"] = format_nae_formula(r.source.formula);
  Json fams = Json::array();
  for (const auto& f : r.source.families) {
    fams.push_back({{"occurrences", f.occurrences},
                    {"pos", f.pos},
                    {"neg", f.neg},
                    {"z", f.z},
                    {"z_neg", f.z_neg}});
  }
  j["var_map"] = std::move(fams);
  return j;
}

PermutationInstance instance_from_json(const Json& j) {
  const auto n = field<std::size_t>(j, "n");
  const auto perms = field<std::vector<Permutation>>(j, "perms");
  const bool circular = j.contains("circular") ? field<bool>(j, "circular") : false;
  if (j.contains("d") && field<std::size_t>(j, "d") != perms.size()) {
    throw std::invalid_argument("field 'd' disagrees with the number of permutations");
  }
  return PermutationInstance(n, circular, perms);
}

Coloring coloring_from_json(const Json& j) {
  auto colors = field<std::vector<Color>>(j, "colors");
  Color k = 1;
  if (j.contains("k")) {
    k = field<Color>(j, "k");
  } else {
    for (Color c : colors) k = std::max(k, c + 1);
  }
  return Coloring(k, std::move(colors));
}

PointSet points_from_json(const Json& j) {
  PointSet ps;
  ps.points = field<std::vector<std::vector<double>>>(j, "points");
  ps.d = j.contains("d") ? field<std::size_t>(j, "d")
                         : (ps.points.empty() ? 2 : ps.points.front().size());
  return ps;
}

StripSet strips_from_json(const Json& j) {
  StripSet ss;
  ss.d = field<std::size_t>(j, "d");
  for (const auto& s : field<Json>(j, "strips")) {
    ss.strips.push_back(
        {field<std::size_t>(s, "axis"), field<double>(s, "lo"), field<double>(s, "hi")});
  }
  ss.validate();
  return ss;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace polystrip
