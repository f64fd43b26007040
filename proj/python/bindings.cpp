#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "matchpow/io.hpp"
#include "matchpow/verify.hpp"

namespace py = pybind11;
using namespace matchpow;

namespace {

MonomialIdeal ideal_from_parts(const std::vector<std::string>& vars,
                               const std::vector<std::vector<int>>& gens) {
  auto amb = make_ambient(vars);
  std::vector<Monomial> ms;
  for (const auto& e : gens) ms.push_back(Monomial(e));
  return MonomialIdeal(amb, ms);
}

py::dict ideal_to_dict(const MonomialIdeal& I) {
  py::dict d;
  d["vars"] = I.ambient()->names();
  std::vector<std::vector<int>> gens;
  for (const auto& g : I.gens()) gens.push_back(g.exps);
  d["gens"] = gens;
  return d;
}

CoefficientField field_from(const std::string& spec) { return CoefficientField::parse(spec); }

BettiOptions opts_for(const MonomialIdeal& I, int max_gens) {
  BettiOptions b;
  b.max_gens = max_gens;
  return betti_options_for(I, b);
}

WeightedOrientedGraph graph_from_parts(const std::vector<std::string>& vertices,
                                       const std::vector<std::pair<int, int>>& arcs,
                                       const std::map<std::string, long>& weights) {
  std::vector<long> w(vertices.size(), 1);
  for (const auto& [name, wt] : weights) {
    auto it = std::find(vertices.begin(), vertices.end(), name);
    if (it == vertices.end()) throw InvalidArgumentError("unknown vertex: " + name);
    w[static_cast<size_t>(it - vertices.begin())] = wt;
  }
  return WeightedOrientedGraph(vertices, arcs, w);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "matching powers of monomial ideals: invariants and structure tests";

  // translators run newest-first, so the base class goes first
  py::register_exception<Error>(m, "MatchpowError");
  py::register_exception<CapExceededError>(m, "CapExceeded");

  py::class_<MonomialIdeal>(m, "MonomialIdeal")
      .def(py::init(&ideal_from_parts), py::arg("vars"), py::arg("gens"))
      .def_property_readonly("vars",
                             [](const MonomialIdeal& I) { return I.ambient()->names(); })
      .def_property_readonly("gens",
                             [](const MonomialIdeal& I) {
                               std::vector<std::vector<int>> gens;
                               for (const auto& g : I.gens()) gens.push_back(g.exps);
                               return gens;
                             })
      .def("__len__", &MonomialIdeal::num_gens)
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
      .def("__repr__", [](const MonomialIdeal& I) { return to_string(I); })
      .def("is_zero", &MonomialIdeal::is_zero)
      .def("to_dict", &ideal_to_dict)
      .def("text", [](const MonomialIdeal& I) { return ideal_to_text(I); });

  m.def("parse_ideal", [](const std::string& text) { return parse_ideal_auto(text).ideal; },
        "parse the ideal text or JSON format");
  m.def("radical", &radical);
  m.def("polarize", &polarize);
  m.def("initial_degree", &initial_degree);
  m.def("bounding_multidegree", &bounding_multidegree);
  m.def("monomial_grade", &monomial_grade);
  m.def("matching_power", &matching_power, py::arg("ideal"), py::arg("k"));
  m.def("generator_matchings", &generator_matchings, py::arg("ideal"), py::arg("k"));

  m.def(
      "betti",
      [](const MonomialIdeal& I, const std::string& field, int max_gens, bool multigraded) {
        auto t = multigraded_betti(I, field_from(field), opts_for(I, max_gens));
        py::dict d;
        py::dict graded;
        for (const auto& [key, dim] : t.graded)
          graded[py::make_tuple(key.first, key.second)] = dim;
        d["graded"] = graded;
        if (multigraded) {
          py::dict mg;
          for (const auto& [key, dim] : t.multigraded)
            mg[py::make_tuple(key.first, py::tuple(py::cast(key.second)))] = dim;
          d["multigraded"] = mg;
        }
        auto inv = invariants_from_table(t, I);
        d["pd_ideal"] = inv.pd_ideal;
        d["pd_quotient"] = inv.pd_quotient;
        d["depth_quotient"] = inv.depth_quotient;
        d["reg"] = inv.reg_ideal;
        d["indeg"] = inv.indeg;
        d["field"] = t.field.label();
        return d;
      },
      py::arg("ideal"), py::arg("field") = "q", py::arg("max_gens") = 20,
      py::arg("multigraded") = false);

  m.def(
      "normalized_depth",
      [](const MonomialIdeal& I, const std::string& field, int max_gens) {
        auto prof = normalized_depth(I, field_from(field), opts_for(I, max_gens));
        return prof.values;
      },
      py::arg("ideal"), py::arg("field") = "q", py::arg("max_gens") = 20);

  m.def(
      "has_linear_resolution",
      [](const MonomialIdeal& I, const std::string& field, int max_gens) {
        return has_linear_resolution(I, field_from(field), opts_for(I, max_gens));
      },
      py::arg("ideal"), py::arg("field") = "q", py::arg("max_gens") = 20);

  m.def("is_polymatroidal",
        [](const MonomialIdeal& I) {
          auto r = is_polymatroidal(I);
          return py::make_tuple(r.value, r.describe(I));
        });
  m.def("is_matroidal",
        [](const MonomialIdeal& I) {
          auto r = is_matroidal(I);
          return py::make_tuple(r.value, r.describe(I));
        });
  m.def("is_linearly_related",
        [](const MonomialIdeal& I) {
          auto r = is_linearly_related(I);
          return py::make_tuple(r.value, r.describe(I));
        });
  m.def("has_linear_quotients",
        [](const MonomialIdeal& I) -> py::object {
          auto r = has_linear_quotients(I);
          if (!r.ordering) return py::none();
          return py::cast(*r.ordering);
        });

  py::class_<SimpleGraph>(m, "SimpleGraph")
      .def(py::init<std::vector<std::string>, std::vector<std::pair<int, int>>, bool>(),
           py::arg("vertices"), py::arg("edges"), py::arg("allow_isolated") = false)
      .def_property_readonly("vertices", &SimpleGraph::vertex_names)
      .def_property_readonly("edges", &SimpleGraph::edges);

  py::class_<WeightedOrientedGraph>(m, "WeightedOrientedGraph")
      .def(py::init(&graph_from_parts), py::arg("vertices"), py::arg("arcs"),
           py::arg("weights") = std::map<std::string, long>{})
      .def_property_readonly("vertices", &WeightedOrientedGraph::vertex_names)
      .def_property_readonly("arcs", &WeightedOrientedGraph::arcs)
      .def_property_readonly("weights", &WeightedOrientedGraph::weights)
      .def("underlying", &WeightedOrientedGraph::underlying, py::arg("allow_isolated") = false);

  m.def("edge_ideal", &edge_ideal);
  m.def("oriented_edge_ideal", &oriented_edge_ideal);
  m.def("matching_number", &matching_number);
  m.def("induced_matching_number", &induced_matching_number);
  m.def("weighted_induced_matching_number", &weighted_induced_matching_number);
  m.def("longest_induced_path", &longest_induced_path);
  m.def("validate_weights", &validate_weights);

  m.def(
      "verify_examples",
      [](const std::string& field) {
        VerifyOptions opt;
        opt.field = field_from(field);
        std::vector<py::dict> out;
        for (const auto& r : reproduce_examples(opt)) {
          py::dict d;
          d["check_id"] = r.check_id;
          d["verdict"] = verdict_name(r.verdict);
          d["flagged"] = r.flagged;
          d["detail"] = r.detail;
          out.push_back(d);
        }
        return out;
      },
      py::arg("field") = "q");
}
