#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minmaxhom/classify.hpp"
#include "minmaxhom/generate.hpp"
#include "minmaxhom/json_io.hpp"
#include "minmaxhom/oracle.hpp"
#include "minmaxhom/solver.hpp"

namespace py = pybind11;
using namespace minmaxhom;

PYBIND11_MODULE(minmaxhom, m) {
    m.doc() = "Min-Max ordering duality, MinHOM dichotomy and exact solver";

    py::class_<Digraph>(m, "Digraph")
        .def(py::init<int, std::vector<Arc>>(), py::arg("n"), py::arg("arcs"))
        .def_property_readonly("n", &Digraph::vertex_count)
        .def_property_readonly("arcs", &Digraph::arcs)
        .def("has_arc", &Digraph::has_arc)
        .def("__repr__", [](const Digraph& d) {
            return "Digraph(n=" + std::to_string(d.vertex_count()) +
                   ", m=" + std::to_string(d.arc_count()) + ")";
        });

    m.def("parse_digraph",
          [](const std::string& text) { return parse_digraph(text); },
          "Parse the .dg format");
    m.def("serialize_digraph", &serialize_digraph,
          "Canonical .dg serialization");

    m.def(
        "classify_json",
        [](const Digraph& h) { return classification_to_json(classify(h)); },
        "Classify MinHOM(H); returns the classification JSON");

    m.def(
        "order_json",
        [](const Digraph& h, int k) {
            LevelResult lr = level_assignment_all(h, k);
            if (!lr.ok())
                throw std::invalid_argument(
                    "no homomorphism to the directed k-cycle");
            PairGraph pg = PairGraph::build(h, *lr.assignment);
            AdmitsResult adm = admits_ordering(pg);
            if (!adm.yes) return certificate_to_json(adm.certificate, k);
            return ordering_to_json(synthesize_ordering(h, pg));
        },
        py::arg("h"), py::arg("k") = 1,
        "Ordering JSON when a k-Min-Max ordering exists, else certificate JSON");

    m.def(
        "solve",
        [](const Digraph& h, const Digraph& g,
           std::vector<std::vector<std::int64_t>> costs) {
            Classification c = classify(h);
            if (!c.polynomial())
                throw std::invalid_argument("MinHOM for this template is NP-complete");
            Solution s = solve_polynomial(h, c, CostInstance{g, std::move(costs)});
            return solution_to_json(s);
        },
        py::arg("h"), py::arg("g"), py::arg("costs"),
        "Exact MinHOM solve; returns the solution JSON");

    m.def(
        "solve_bruteforce",
        [](const Digraph& h, const Digraph& g,
           std::vector<std::vector<std::int64_t>> costs, std::int64_t guard) {
            Solution s =
                solve_bruteforce(h, CostInstance{g, std::move(costs)}, guard);
            return solution_to_json(s);
        },
        py::arg("h"), py::arg("g"), py::arg("costs"),
        py::arg("guard") = 10'000'000, "Exhaustive MinHOM oracle");

    m.def(
        "gen_random",
        [](int n, double p, std::uint64_t seed, bool loops) {
            return gen_random(GeneratorSpec{n, p, seed, loops});
        },
        py::arg("n"), py::arg("p"), py::arg("seed"), py::arg("loops") = false);
    m.def("gen_proper_interval", &gen_proper_interval, py::arg("n"),
          py::arg("seed"));
}
