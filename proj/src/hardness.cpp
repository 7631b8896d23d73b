#include "polystrip/hardness.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace polystrip {

bool NAEFormula::is_monotone() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) {
    return std::all_of(c.begin(), c.end(), [](const Literal& l) { return l.positive; });
  });
}

void NAEFormula::validate() const {
  for (const auto& c : clauses) {
    for (const auto& l : c) {
      if (l.var >= num_vars) throw std::invalid_argument("literal names an unknown variable");
    }
  }
}

bool is_nae(const NAEFormula& f, const Assignment& a) {
  if (a.size() != f.num_vars) throw std::invalid_argument("assignment has wrong length");
  for (const auto& c : f.clauses) {
    bool any_true = false, any_false = false;
    for (const auto& l : c) {
      (a[l.var] == l.positive ? any_true : any_false) = true;
    }
    if (!any_true || !any_false) return false;
  }
  return true;
}

NAEFormula parse_nae_formula(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  NAEFormula f;
  std::optional<std::size_t> declared_clauses;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c') continue;
    if (first == "p") {
      std::string kind;
      std::size_t v = 0, c = 0;
      if (!(ls >> kind >> v >> c) || kind != "nae3") {
        throw std::invalid_argument("malformed header, expected 'p nae3 V C'");
      }
      f.num_vars = v;
      declared_clauses = c;
      continue;
    }
    if (!declared_clauses) throw std::invalid_argument("clause before 'p nae3' header");
    std::vector<long long> lits;
    ls.clear();
    ls.str(line);
    long long x = 0;
    while (ls >> x) {
      if (x == 0) break;
      lits.push_back(x);
    }
    if (!ls.eof() && x != 0) throw std::invalid_argument("non-integer token in clause: " + line);
    if (lits.size() != 3) throw std::invalid_argument("clause must have 3 literals: " + line);
    Clause clause;
    for (std::size_t i = 0; i < 3; ++i) {
      const long long v = lits[i] < 0 ? -lits[i] : lits[i];
      if (v > static_cast<long long>(f.num_vars)) {
        throw std::invalid_argument("literal exceeds declared variable count: " + line);
      }
      clause[i] = {static_cast<std::size_t>(v - 1), lits[i] > 0};
    }
    f.clauses.push_back(clause);
  }
  if (!declared_clauses) throw std::invalid_argument("missing 'p nae3 V C' header");
  if (*declared_clauses != f.clauses.size()) {
    throw std::invalid_argument("header declares " + std::to_string(*declared_clauses) +
                                " clauses, found " + std::to_string(f.clauses.size()));
  }
  return f;
}

std::string format_nae_formula(const NAEFormula& f) {
  std::ostringstream out;
  out << "p nae3 " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (const auto& l : c) {
      out << (l.positive ? "" : "-") << l.var + 1 << ' ';
    }
    out << "0\n";
  }
  return out.str();
}

MonotoneFormula monotonize(const NAEFormula& f) {
  f.validate();
  MonotoneFormula mf;
  mf.original_vars = f.num_vars;
  mf.original_clauses = f.clauses.size();
  mf.families.resize(f.num_vars);

  std::vector<std::size_t> npos(f.num_vars, 0), nneg(f.num_vars, 0);
  for (const auto& c : f.clauses) {
    for (const auto& l : c) ++(l.positive ? npos : nneg)[l.var];
  }

  auto fresh = [&](std::string name) {
    mf.names.push_back(std::move(name));
    return mf.names.size() - 1;
  };
  for (std::size_t v = 0; v < f.num_vars; ++v) {
    VariableFamily& fam = mf.families[v];
    const std::size_t m = std::max(npos[v], nneg[v]);
    fam.occurrences = m;
    if (m == 0) continue;
    const std::string x = "x" + std::to_string(v + 1);
    for (std::size_t i = 1; i <= m + 1; ++i) {
      const std::string idx = "_" + std::to_string(i);
      fam.pos.push_back(fresh(x + idx));
      if (i <= m) fam.neg.push_back(fresh(x + "'" + idx));
      fam.z.push_back(fresh("Z^" + x + idx));
      fam.z_neg.push_back(fresh("Z'^" + x + idx));
    }
  }
  mf.formula.num_vars = mf.names.size();

  auto lit = [](std::size_t v) { return Literal{v, true}; };
  std::vector<std::size_t> seen_pos(f.num_vars, 0), seen_neg(f.num_vars, 0);
  for (const auto& c : f.clauses) {
    Clause out;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& fam = mf.families[c[i].var];
      out[i] = lit(c[i].positive ? fam.pos[seen_pos[c[i].var]++] : fam.neg[seen_neg[c[i].var]++]);
    }
    mf.formula.clauses.push_back(out);
  }

  for (const auto& fam : mf.families) {
    for (std::size_t i = 0; i < fam.occurrences; ++i) {
      const auto x = lit(fam.pos[i]), xn = lit(fam.neg[i]), x1 = lit(fam.pos[i + 1]);
      const auto z = lit(fam.z[i]), zn = lit(fam.z_neg[i]);
      const auto z1 = lit(fam.z[i + 1]), zn1 = lit(fam.z_neg[i + 1]);
      mf.formula.clauses.push_back({z, x, xn});
      mf.formula.clauses.push_back({x, xn, z1});
      mf.formula.clauses.push_back({x, zn, xn});
      mf.formula.clauses.push_back({z, zn, z1});
      mf.formula.clauses.push_back({xn, z1, x1});
      mf.formula.clauses.push_back({zn, xn, x1});
      mf.formula.clauses.push_back({xn, x1, zn1});
      mf.formula.clauses.push_back({zn, z1, zn1});
    }
  }
  return mf;
}

Assignment lift_assignment(const MonotoneFormula& mf, const Assignment& original) {
  if (original.size() != mf.original_vars) {
    throw std::invalid_argument("assignment has wrong length");
  }
  Assignment out(mf.formula.num_vars, false);
  for (std::size_t v = 0; v < mf.original_vars; ++v) {
    const auto& fam = mf.families[v];
    for (std::size_t id : fam.pos) out[id] = original[v];
    for (std::size_t id : fam.neg) out[id] = !original[v];
    for (std::size_t id : fam.z) out[id] = true;
    for (std::size_t id : fam.z_neg) out[id] = false;
  }
  return out;
}

namespace {

// Builds one ordering as a token stream; std::nullopt tokens are dummies.
class Layout {
 public:
  explicit Layout(std::size_t elements) : placed_(elements, 0) {}

  void block(const std::vector<Item>& items) {
    for (Item it : items) put(it);
    tokens_.emplace_back();
    tokens_.emplace_back();
  }

  // Every element not yet placed, each followed by a dummy pair.
  void isolate_rest() {
    for (Item it = 0; it < placed_.size(); ++it) {
      if (!placed_[it]) block({it});
    }
  }

  void pad_to(std::size_t length) {
    while (tokens_.size() < length) tokens_.emplace_back();
  }

  const std::vector<std::optional<Item>>& tokens() const { return tokens_; }

 private:
  void put(Item it) {
    if (placed_.at(it)) throw std::logic_error("element placed twice in one ordering");
    placed_[it] = 1;
    tokens_.emplace_back(it);
  }

  std::vector<char> placed_;
  std::vector<std::optional<Item>> tokens_;
};

}  // namespace

ReductionOutput reduce(const MonotoneFormula& mf) {
  if (!mf.formula.is_monotone()) throw std::invalid_argument("reduce needs a monotone formula");

  ReductionOutput r;
  r.source = mf;
  for (std::size_t v = 0; v < mf.formula.num_vars; ++v) {
    r.var_element.push_back(static_cast<Item>(r.roles.size()));
    r.roles.push_back({ElementKind::Variable, v, mf.names[v]});
  }
  for (std::size_t j = 0; j < 2 * mf.original_clauses; ++j) {
    r.clause_element.push_back(static_cast<Item>(r.roles.size()));
    r.roles.push_back({ElementKind::Clause, j, "c_" + std::to_string(j + 1)});
  }
  // Four guards per non-empty family: both ends of the second and third chains.
  std::vector<std::array<Item, 4>> guards(mf.families.size());
  for (std::size_t v = 0; v < mf.families.size(); ++v) {
    if (mf.families[v].occurrences == 0) continue;
    for (std::size_t g = 0; g < 4; ++g) {
      guards[v][g] = static_cast<Item>(r.roles.size());
      r.guard_element.push_back(guards[v][g]);
      r.roles.push_back({ElementKind::Guard, r.guard_element.size() - 1,
                         "g_" + std::to_string(r.guard_element.size())});
    }
  }
  const std::size_t elements = r.roles.size();
  auto el = [&](std::size_t var) { return r.var_element[var]; };

  std::array<Layout, 3> layout{Layout(elements), Layout(elements), Layout(elements)};
  for (std::size_t j = 0; j < mf.original_clauses; ++j) {
    const Clause& c = mf.formula.clauses[j];
    layout[0].block({r.clause_element[2 * j], el(c[0].var), el(c[1].var), el(c[2].var),
                     r.clause_element[2 * j + 1]});
  }
  for (std::size_t v = 0; v < mf.families.size(); ++v) {
    const auto& fam = mf.families[v];
    const std::size_t m = fam.occurrences;
    if (m == 0) continue;
    std::vector<Item> first, second{guards[v][0]}, third{guards[v][2]};
    for (std::size_t i = 0; i <= m; ++i) {
      first.push_back(el(fam.z[i]));
      first.push_back(el(fam.z_neg[i]));
      second.push_back(el(fam.z[i]));
      second.push_back(el(fam.pos[i]));
      third.push_back(el(fam.pos[i]));
      if (i < m) {
        second.push_back(el(fam.neg[i]));
        third.push_back(el(fam.z_neg[i]));
        third.push_back(el(fam.neg[i]));
      } else {
        third.push_back(el(fam.z_neg[i]));
      }
    }
    second.push_back(guards[v][1]);
    third.push_back(guards[v][3]);
    layout[0].block(first);
    layout[1].block(second);
    layout[2].block(third);
  }
  for (auto& l : layout) l.isolate_rest();
  std::size_t length = 0;
  for (const auto& l : layout) length = std::max(length, l.tokens().size());
  if (length == 0) length = 2;
  for (auto& l : layout) l.pad_to(length);

  const std::size_t dummies = length - elements;
  for (std::size_t i = 0; i < dummies; ++i) {
    r.dummy_element.push_back(static_cast<Item>(r.roles.size()));
    r.roles.push_back({ElementKind::Dummy, i, "*" + std::to_string(i + 1)});
  }
  std::vector<Permutation> perms;
  for (const auto& l : layout) {
    Permutation perm;
    std::size_t next_dummy = 0;
    for (const auto& tok : l.tokens()) {
      perm.push_back(tok ? *tok : r.dummy_element[next_dummy++]);
    }
    perms.push_back(std::move(perm));
  }
  r.instance = PermutationInstance(length, false, std::move(perms));
  return r;
}

Coloring assignment_to_coloring(const ReductionOutput& r, const Assignment& a) {
  const MonotoneFormula& mf = r.source;
  if (!is_nae(mf.formula, a)) {
    throw std::invalid_argument("assignment is not NAE for the monotone formula");
  }
  for (const auto& fam : mf.families) {
    for (std::size_t i = 0; i < fam.z.size(); ++i) {
      if (a[fam.z[i]] == a[fam.z_neg[i]]) {
        throw std::invalid_argument("assignment gives Z and Z' the same value");
      }
    }
  }

  std::vector<Color> colors(r.instance.n(), 0);
  for (std::size_t v = 0; v < a.size(); ++v) colors[r.var_element[v]] = a[v] ? 1 : 0;
  for (std::size_t j = 0; j < mf.original_clauses; ++j) {
    const Clause& c = mf.formula.clauses[j];
    colors[r.clause_element[2 * j]] = a[c[0].var] ? 0 : 1;
    colors[r.clause_element[2 * j + 1]] = a[c[2].var] ? 0 : 1;
  }
  for (std::size_t i = 0; i < r.dummy_element.size(); ++i) {
    colors[r.dummy_element[i]] = i % 2;
  }
  // A guard takes the color opposite to its chain neighbor.
  const std::vector<char> is_guard = [&] {
    std::vector<char> g(r.instance.n(), 0);
    for (Item it : r.guard_element) g[it] = 1;
    return g;
  }();
  for (const auto& perm : r.instance.perms()) {
    for (std::size_t pos = 0; pos < perm.size(); ++pos) {
      if (!is_guard[perm[pos]]) continue;
      const bool opens = pos + 1 < perm.size() && r.roles[perm[pos + 1]].kind == ElementKind::Variable;
      const bool closes = pos > 0 && r.roles[perm[pos - 1]].kind == ElementKind::Variable;
      if (opens) colors[perm[pos]] = 1 - colors[perm[pos + 1]];
      else if (closes) colors[perm[pos]] = 1 - colors[perm[pos - 1]];
    }
  }

  Coloring col(2, std::move(colors));
  if (!verify_windows(r.instance, col, 3).valid) {
    throw std::logic_error("reduction coloring has a monochromatic consecutive triple");
  }
  return col;
}

Assignment coloring_to_assignment(const ReductionOutput& r, const Coloring& col) {
  if (col.k != 2) throw std::invalid_argument("reduction colorings use two colors");
  if (!verify_windows(r.instance, col, 3).valid) {
    throw std::invalid_argument("coloring has a monochromatic consecutive triple");
  }
  const MonotoneFormula& mf = r.source;
  Assignment out(mf.original_vars, false);
  for (std::size_t v = 0; v < mf.original_vars; ++v) {
    const auto& fam = mf.families[v];
    if (!fam.pos.empty()) out[v] = col[r.var_element[fam.pos[0]]] == 1;
  }
  return out;
}

}  // namespace polystrip
