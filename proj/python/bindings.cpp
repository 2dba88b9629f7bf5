#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "linarr/linarr.hpp"

namespace py = pybind11;
using namespace linarr;

namespace {

py::object to_fraction(const Rational& r) {
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  const auto num = py::int_(py::str(numerator(r).str()));
  const auto den = py::int_(py::str(denominator(r).str()));
  return fraction(num, den);
}

py::object optional_double(const std::optional<double>& x) {
  return x ? py::object(py::float_(*x)) : py::object(py::none());
}

py::dict report_dict(const AnalysisReport& report) {
  py::dict d;
  d["n"] = report.tree.size();
  d["k2"] = report.prediction.k2;
  d["c_max"] = report.prediction.c_max;
  d["total_length"] = report.total_length;
  d["c_true"] = report.crossings.total;
  d["c_true_rel"] = optional_double(report.crossings.relative);
  d["e0"] = report.prediction.e0;
  d["e2"] = report.prediction.e2;
  d["e0_rel"] = optional_double(report.prediction.e0_rel);
  d["e2_rel"] = optional_double(report.prediction.e2_rel);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Crossings and crossing predictors for linear arrangements of trees";

  py::register_exception<TreeError>(m, "TreeError", PyExc_ValueError);
  py::register_exception<ArrangementError>(m, "ArrangementError", PyExc_ValueError);

  py::class_<LabeledTree>(m, "Tree")
      .def(py::init([](int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             return build_tree(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &LabeledTree::size)
      .def_property_readonly("edges",
                             [](const LabeledTree& t) {
                               std::vector<std::pair<Vertex, Vertex>> out;
                               for (const auto& e : t.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("degree", &LabeledTree::degree)
      .def("__eq__", [](const LabeledTree& a, const LabeledTree& b) { return a == b; })
      .def("__repr__", [](const LabeledTree& t) {
        return "Tree(n=" + std::to_string(t.size()) + ", edges=" + std::to_string(t.edges().size()) + ")";
      });

  py::class_<LinearArrangement>(m, "Arrangement")
      .def(py::init<std::vector<Position>>(), py::arg("positions"))
      .def_static("identity", &LinearArrangement::identity)
      .def_property_readonly("positions", &LinearArrangement::positions)
      .def("position", &LinearArrangement::position)
      .def("reversed", &LinearArrangement::reversed)
      .def("__eq__", [](const LinearArrangement& a, const LinearArrangement& b) { return a == b; });

  m.def("total_length", &total_length);
  m.def("degree_second_moment", &degree_second_moment);
  m.def("c_max", &c_max);
  m.def("count_crossings", [](const LabeledTree& t, const LinearArrangement& a) {
    return count_crossings(t, a).total;
  });

  m.def("p_cross_given_lengths",
        [](int n, int d1, int d2) { return to_fraction(p_cross_given_lengths(n, d1, d2)); });
  m.def("p_table", [](int n) {
    const auto table = build_p_table(n);
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(n - 1));
    for (int d1 = 1; d1 < n; ++d1) {
      for (int d2 = 1; d2 < n; ++d2) rows[static_cast<std::size_t>(d1 - 1)].push_back(table->probability(d1, d2));
    }
    return rows;
  });
  m.def("e0", &e0);
  m.def("e2", py::overload_cast<const LabeledTree&, const LinearArrangement&>(&e2));
  m.def(
      "e_full",
      [](const LabeledTree& t, const LinearArrangement& a, int cap) { return to_fraction(e_full(t, a, cap).expected); },
      py::arg("tree"), py::arg("arrangement"), py::arg("cap") = kDefaultBruteForceCap);
  m.def("verify_identity", [](int n) { return to_fraction(verify_identity(n)); });

  m.def(
      "aldous_broder",
      [](int n, std::uint64_t seed) {
        Rng rng(seed);
        return aldous_broder(n, rng);
      },
      py::arg("n"), py::arg("seed"));

  m.def("analyze", [](const LabeledTree& t, const LinearArrangement& a) { return report_dict(analyze(t, a)); });

  py::class_<EnsembleConfig>(m, "EnsembleConfig")
      .def(py::init<>())
      .def_readwrite("n_min", &EnsembleConfig::n_min)
      .def_readwrite("n_max", &EnsembleConfig::n_max)
      .def_readwrite("replicas", &EnsembleConfig::replicas)
      .def_readwrite("c_true_values", &EnsembleConfig::c_true_values)
      .def_readwrite("seed", &EnsembleConfig::seed)
      .def_readwrite("workers", &EnsembleConfig::workers)
      .def_readwrite("max_attempts_per_n", &EnsembleConfig::max_attempts_per_n)
      .def_property(
          "post_hoc", [](const EnsembleConfig& c) { return c.mode == QuotaMode::kPostHoc; },
          [](EnsembleConfig& c, bool post_hoc) { c.mode = post_hoc ? QuotaMode::kPostHoc : QuotaMode::kPerCell; });

  m.def(
      "run_ensemble",
      [](const EnsembleConfig& config) {
        EnsembleResult result;
        {
          py::gil_scoped_release release;
          result = run_ensemble(config);
        }
        py::list cells;
        for (const auto& c : result.cells) {
          py::dict d;
          d["n"] = c.n;
          d["c_true"] = c.c_true;
          d["replicas"] = c.replicas;
          d["samples_used"] = c.samples_used;
          d["mean_delta0"] = c.mean_delta0;
          d["mean_delta2"] = c.mean_delta2;
          d["sd_delta0"] = c.sd_delta0;
          d["sd_delta2"] = c.sd_delta2;
          cells.append(d);
        }
        py::dict out;
        out["cells"] = cells;
        out["partial"] = result.partial;
        return out;
      },
      py::arg("config"));
}
