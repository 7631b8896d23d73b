#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polystrip/constructions.hpp"
#include "polystrip/dual.hpp"
#include "polystrip/geometry.hpp"
#include "polystrip/hardness.hpp"
#include "polystrip/instance.hpp"
#include "polystrip/json_io.hpp"
#include "polystrip/lll.hpp"
#include "polystrip/oracle.hpp"
#include "polystrip/planar.hpp"

namespace py = pybind11;
using namespace polystrip;

namespace {

// Composite results cross the boundary as plain dicts, same shape as the CLI.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

StripSet strips_from_tuples(std::size_t d,
                            const std::vector<std::tuple<std::size_t, double, double>>& strips) {
  StripSet ss{d, {}};
  for (const auto& [axis, lo, hi] : strips) ss.strips.push_back({axis, lo, hi});
  ss.validate();
  return ss;
}

}  // namespace

PYBIND11_MODULE(polystrip, m) {
  m.doc() = "Polychromatic colorings of permutations, strips and wedges";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<PermutationInstance>(m, "PermutationInstance")
      .def(py::init<std::size_t, bool, std::vector<Permutation>>(), py::arg("n"),
           py::arg("circular"), py::arg("perms"))
      .def_property_readonly("n", &PermutationInstance::n)
      .def_property_readonly("d", &PermutationInstance::d)
      .def_property_readonly("circular", &PermutationInstance::circular)
      .def_property_readonly("perms", &PermutationInstance::perms)
      .def("to_dict", [](const PermutationInstance& i) { return to_py(to_json(i)); })
      .def("__eq__", [](const PermutationInstance& a, const PermutationInstance& b) { return a == b; })
      .def("__repr__", [](const PermutationInstance& i) {
        return "PermutationInstance(n=" + std::to_string(i.n()) + ", d=" + std::to_string(i.d()) +
               (i.circular() ? ", circular)" : ")");
      });

  py::class_<Coloring>(m, "Coloring")
      .def(py::init<Color, std::vector<Color>>(), py::arg("k"), py::arg("colors"))
      .def_readonly("k", &Coloring::k)
      .def_readonly("colors", &Coloring::colors)
      .def("__len__", &Coloring::size)
      .def("__getitem__", [](const Coloring& c, std::size_t i) {
        if (i >= c.size()) throw py::index_error();
        return c[i];
      });

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("valid", &VerificationReport::valid)
      .def_readonly("window", &VerificationReport::window)
      .def_readonly("min_window", &VerificationReport::min_window)
      .def_readonly("missing_color", &VerificationReport::missing_color)
      .def_property_readonly("violations", [](const VerificationReport& r) {
        std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
        for (const auto& v : r.violations) out.emplace_back(v.perm, v.start, v.length);
        return out;
      });

  m.def("gen_random_instance", &gen_random_instance, py::arg("seed"), py::arg("n"), py::arg("d"),
        py::arg("circular") = false);
  m.def("verify_windows", &verify_windows, py::arg("instance"), py::arg("coloring"), py::arg("p"));
  m.def(
      "min_polychromatic_window",
      [](const PermutationInstance& inst, const Coloring& col) {
        return min_polychromatic_window(inst, col).size;
      },
      py::arg("instance"), py::arg("coloring"));
  m.def(
      "bounds_table",
      [](std::size_t k, std::size_t d) {
        const auto b = bounds_table(k, d);
        py::dict out;
        out["p_upper"] = b.p_upper;
        out["p_circ_upper"] = b.p_circ_upper;
        out["p_dual_upper"] = b.p_dual_upper;
        out["lower"] = b.lower;
        return out;
      },
      py::arg("k"), py::arg("d"));

  m.def(
      "points_to_instance",
      [](const std::vector<std::vector<double>>& points, std::size_t d) {
        return points_to_instance(PointSet{d, points});
      },
      py::arg("points"), py::arg("d") = 2);
  m.def(
      "wedges_to_instance",
      [](const std::vector<std::vector<double>>& points,
         const std::vector<std::array<double, 2>>& apices) {
        return wedges_to_instance(PointSet{2, points}, apices);
      },
      py::arg("points"), py::arg("apices"));

  m.def("color_planar", &color_planar, py::arg("instance"), py::arg("k"));
  m.def(
      "color_circular",
      [](const PermutationInstance& inst, std::size_t k) {
        const auto r = color_circular(inst, k);
        return py::make_tuple(r.coloring, r.achieved_bound);
      },
      py::arg("instance"), py::arg("k"));
  m.def("decide_two_window", &decide_two_window, py::arg("instance"));

  m.def("condition_holds", &condition_holds, py::arg("k"), py::arg("d"), py::arg("t"));
  m.def(
      "window_bound",
      [](std::size_t k, std::size_t d) {
        const auto w = window_bound(k, d);
        return py::make_tuple(w.t_formula, w.t_min);
      },
      py::arg("k"), py::arg("d"));
  m.def(
      "color_resample",
      [](const PermutationInstance& inst, std::size_t k, std::size_t t, std::uint64_t seed,
         std::size_t max_rounds) {
        const auto r = color_resample(inst, LLLParams{k, inst.d(), t, seed, max_rounds});
        return py::make_tuple(r.coloring, r.resamples);
      },
      py::arg("instance"), py::arg("k"), py::arg("t"), py::arg("seed") = 0,
      py::arg("max_rounds") = 1'000'000);

  m.def(
      "color_intervals",
      [](const std::vector<std::pair<double, double>>& intervals, std::size_t k) {
        std::vector<Interval> ivs;
        for (const auto& [lo, hi] : intervals) ivs.push_back({lo, hi, ivs.size()});
        return color_intervals(ivs, k);
      },
      py::arg("intervals"), py::arg("k"));
  m.def(
      "color_strips",
      [](std::size_t d, const std::vector<std::tuple<std::size_t, double, double>>& strips,
         std::size_t k) { return color_strips(strips_from_tuples(d, strips), k); },
      py::arg("d"), py::arg("strips"), py::arg("k"));
  m.def(
      "verify_depth",
      [](std::size_t d, const std::vector<std::tuple<std::size_t, double, double>>& strips,
         const Coloring& col, std::size_t threshold) {
        return to_py(to_json(verify_depth(strips_from_tuples(d, strips), col, threshold)));
      },
      py::arg("d"), py::arg("strips"), py::arg("coloring"), py::arg("threshold"));

  m.def(
      "primal_lower_bound",
      [](std::size_t k, std::size_t d) { return to_py(to_json(primal_lower_bound(k, d))); },
      py::arg("k"), py::arg("d"));
  m.def(
      "primal_lower_bound_instance",
      [](std::size_t k, std::size_t d) { return *primal_lower_bound(k, d).primal; }, py::arg("k"),
      py::arg("d"));
  m.def(
      "dual_lower_bound",
      [](std::size_t k, std::size_t d) { return to_py(to_json(dual_lower_bound(k, d))); },
      py::arg("k"), py::arg("d"));

  m.def(
      "reduce_nae",
      [](const std::string& text) {
        const auto r = reduce(monotonize(parse_nae_formula(text)));
        return py::make_tuple(r.instance, to_py(to_json(r)));
      },
      py::arg("formula_text"),
      "Returns (instance, details) for a formula in 'p nae3 V C' text form.");
  m.def(
      "nae_brute_force",
      [](const std::string& text, std::uint64_t max_nodes) {
        return nae_brute_force(parse_nae_formula(text), SearchBudget{max_nodes});
      },
      py::arg("formula_text"), py::arg("max_nodes") = 100'000'000);
  m.def(
      "solve_triples",
      [](const PermutationInstance& inst, std::uint64_t max_nodes) {
        return solve_triples(inst, SearchBudget{max_nodes});
      },
      py::arg("instance"), py::arg("max_nodes") = 100'000'000);
  m.def(
      "exhaustive_best_coloring",
      [](const PermutationInstance& inst, std::size_t k, std::size_t p, std::uint64_t max_nodes) {
        return exhaustive_best_coloring(inst, k, p, SearchBudget{max_nodes});
      },
      py::arg("instance"), py::arg("k"), py::arg("p"), py::arg("max_nodes") = 100'000'000);
  m.def(
      "min_achievable_window",
      [](const PermutationInstance& inst, std::size_t k, std::uint64_t max_nodes) {
        return min_achievable_window(inst, k, SearchBudget{max_nodes});
      },
      py::arg("instance"), py::arg("k"), py::arg("max_nodes") = 100'000'000);
}
