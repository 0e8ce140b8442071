#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homshift/betti.hpp"
#include "homshift/campaigns.hpp"
#include "homshift/graph.hpp"
#include "homshift/io.hpp"
#include "homshift/linquot.hpp"
#include "homshift/polymatroid.hpp"
#include "homshift/reproduce.hpp"

namespace py = pybind11;
using namespace homshift;

namespace {

std::vector<std::string> gen_strings(const MonomialIdeal& I) {
  std::vector<std::string> out;
  for (const Monomial& g : I.gens()) out.push_back(g.str());
  return out;
}

MonomialIdeal hs_auto(const MonomialIdeal& I, int k) {
  if (auto cert = find_admissible_order(I)) {
    MonomialIdeal via_formula = hs_linquot(I, *cert, k);
    MonomialIdeal via_betti = hs_betti(I, k);
    if (via_formula != via_betti)
      throw std::logic_error("hs routes disagree: " + via_formula.str() + " vs " +
                             via_betti.str());
    return via_formula;
  }
  return hs_betti(I, k);
}

}  // namespace

PYBIND11_MODULE(_homshift, m) {
  m.doc() = "homological shift ideals of monomial ideals";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceCapError>(m, "ResourceCapError", PyExc_RuntimeError);

  py::class_<MonomialIdeal>(m, "MonomialIdeal")
      .def_property_readonly("vars", &MonomialIdeal::vars)
      .def_property_readonly("gens", &gen_strings)
      .def("is_zero", &MonomialIdeal::is_zero)
      .def("is_equigenerated", &MonomialIdeal::is_equigenerated)
      .def("__len__", &MonomialIdeal::num_gens)
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
      .def("__str__", &MonomialIdeal::str)
      .def("__repr__", [](const MonomialIdeal& I) { return "MonomialIdeal" + I.str(); });

  m.def("parse_ideal", &parse_ideal_string, py::arg("text"),
        "parse an ideal from its text form (header `n=<int>`, then monomials)");
  m.def("load_ideal", &load_ideal, py::arg("path"));
  m.def("format_ideal", &format_ideal, py::arg("ideal"));

  m.def("hs", &hs_auto, py::arg("ideal"), py::arg("k"),
        "homological shift ideal HS_k, cross-checked over both routes when "
        "the input has linear quotients");
  m.def("hs_via_betti", [](const MonomialIdeal& I, int k) { return hs_betti(I, k); },
        py::arg("ideal"), py::arg("k"));
  m.def("has_linear_quotients",
        [](const MonomialIdeal& I) { return has_linear_quotients(I); },
        py::arg("ideal"));
  m.def("has_linear_resolution",
        [](const MonomialIdeal& I) { return has_linear_resolution(I); },
        py::arg("ideal"));
  m.def("is_polymatroidal",
        [](const MonomialIdeal& I) { return is_polymatroidal(I).ok; },
        py::arg("ideal"));

  m.def("betti_table",
        [](const MonomialIdeal& I) { return multigraded_betti(I).render(); },
        py::arg("ideal"), "Macaulay2-style graded Betti table as text");
  m.def("betti_triples",
        [](const MonomialIdeal& I) {
          std::vector<std::tuple<int, std::string, int>> out;
          BettiTable table = multigraded_betti(I);
          for (const auto& [key, rank] : table.entries())
            out.emplace_back(key.first, key.second.str(), rank);
          return out;
        },
        py::arg("ideal"), "list of (i, multidegree, rank) with nonzero rank");
  m.def("projective_dimension",
        [](const MonomialIdeal& I) { return multigraded_betti(I).projective_dimension(); },
        py::arg("ideal"));

  py::class_<SimpleGraph>(m, "SimpleGraph")
      .def(py::init<int>(), py::arg("n"))
      .def("add_edge", &SimpleGraph::add_edge)
      .def("has_edge", &SimpleGraph::has_edge)
      .def_property_readonly("n", &SimpleGraph::n)
      .def_property_readonly("edges", &SimpleGraph::edges)
      .def("complement", &SimpleGraph::complement)
      .def("__eq__", [](const SimpleGraph& a, const SimpleGraph& b) { return a == b; });

  m.def("parse_graph", &parse_graph_string, py::arg("text"));
  m.def("edge_ideal", &edge_ideal, py::arg("graph"));
  m.def("is_chordal", [](const SimpleGraph& G) { return is_chordal(G).chordal(); },
        py::arg("graph"));
  m.def("chordal_peo",
        [](const SimpleGraph& G) -> std::optional<std::vector<int>> {
          return is_chordal(G).peo;
        },
        py::arg("graph"), "a perfect elimination order, or None");
  m.def("find_reversible_peo",
        [](const SimpleGraph& G) { return find_reversible_peo(G); }, py::arg("graph"));
  m.def("proper_interval_order",
        [](const SimpleGraph& G) { return proper_interval_order(G); }, py::arg("graph"));

  m.def("run_campaign",
        [](const std::string& id, int count, uint64_t seed, int jobs) {
          CampaignReport r = run_campaign(id, count, seed, jobs);
          return py::make_tuple(r.exit_code(), r.passed(), r.failed(), r.render(true));
        },
        py::arg("theorem_id"), py::arg("count"), py::arg("seed"), py::arg("jobs") = 1,
        "returns (exit_code, passed, failed, report_text)");
  m.def("reproduce",
        [](const std::string& id) {
          ReproduceResult r = reproduce_example(id, default_data_dir());
          return py::make_tuple(r.pass, r.log);
        },
        py::arg("example_id"), "returns (pass, log)");
  m.def("example_ids", &reproduce_example_ids);
}
