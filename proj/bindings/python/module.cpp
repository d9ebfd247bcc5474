#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <utility>

#include "twoec/blocks.hpp"
#include "twoec/oracle.hpp"
#include "twoec/stream.hpp"

namespace py = pybind11;
using namespace twoec;

namespace {

SccEngine engine_of(const std::string& name) {
    if (name == "oneway") return SccEngine::OneWay;
    if (name == "twoway") return SccEngine::TwoWay;
    throw py::value_error("engine must be 'oneway' or 'twoway'");
}

void check_vertex(const TwoEcIndex& ix, VertexId v) {
    if (v < 1 || v > ix.vertex_count())
        throw std::out_of_range("vertex " + std::to_string(v) + " not in 1.." +
                                std::to_string(ix.vertex_count()));
}

}  // namespace

PYBIND11_MODULE(twoec, m) {
    m.doc() = "2-edge-connected blocks of a directed graph under edge insertions";

    py::class_<Separation>(m, "Separation")
        .def_readonly("two_ec", &Separation::two_ec)
        .def_property_readonly("strongly_connected",
                               [](const Separation& s) { return s.two_ec || s.same_scc; })
        .def_property_readonly("witness",
                               [](const Separation& s) -> std::optional<std::pair<int, int>> {
                                   if (s.a == kNoVertex) return std::nullopt;
                                   return std::make_pair(s.a, s.b);
                               })
        .def("__repr__", [](const Separation& s) {
            if (s.two_ec) return std::string("Separation(two_ec=True)");
            if (!s.same_scc) return std::string("Separation(strongly_connected=False)");
            return "Separation(witness=(" + std::to_string(s.a) + ", " + std::to_string(s.b) +
                   "))";
        });

    py::class_<TwoEcIndex>(m, "TwoEcIndex")
        .def(py::init([](int n, const std::string& engine) {
                 if (n < 1) throw py::value_error("vertex count must be positive");
                 return TwoEcIndex(n, engine_of(engine));
             }),
             py::arg("n"), py::arg("engine") = "twoway")
        .def_property_readonly("vertex_count", &TwoEcIndex::vertex_count)
        .def(
            "insert_edge",
            [](TwoEcIndex& ix, VertexId u, VertexId v) {
                check_vertex(ix, u);
                check_vertex(ix, v);
                return ix.insert_edge(u, v);
            },
            py::arg("u"), py::arg("v"),
            "Insert a directed edge; False for self-loops and repeats.")
        .def(
            "two_edge_connected",
            [](TwoEcIndex& ix, VertexId u, VertexId v) {
                check_vertex(ix, u);
                check_vertex(ix, v);
                return ix.two_edge_connected(u, v);
            },
            py::arg("u"), py::arg("v"))
        .def(
            "separating_edge",
            [](TwoEcIndex& ix, VertexId u, VertexId v) {
                check_vertex(ix, u);
                check_vertex(ix, v);
                return ix.separating_edge(u, v);
            },
            py::arg("u"), py::arg("v"))
        .def("blocks", &TwoEcIndex::blocks)
        .def("strong_bridges", &TwoEcIndex::strong_bridges)
        .def("last_query_reads", &TwoEcIndex::last_query_reads);

    py::class_<StreamResult>(m, "StreamResult")
        .def_readonly("output", &StreamResult::output)
        .def_readonly("error", &StreamResult::error)
        .def_readonly("exit_code", &StreamResult::exit_code);

    m.def(
        "run_stream",
        [](const std::string& text, const std::string& engine, bool oracle_check, bool metrics) {
            StreamOptions opt;
            opt.engine = engine_of(engine);
            opt.oracle_check = oracle_check;
            opt.metrics = metrics;
            return run_stream(text, opt);
        },
        py::arg("text"), py::arg("engine") = "twoway", py::arg("oracle_check") = false,
        py::arg("metrics") = false, "Execute a command stream and return its answers.");

    m.def(
        "oracle_blocks",
        [](int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
            if (n < 1) throw py::value_error("vertex count must be positive");
            Digraph g(n);
            for (auto [u, v] : edges) {
                if (u < 1 || u > n || v < 1 || v > n)
                    throw std::out_of_range("edge endpoint out of range");
                g.add_edge(u, v);
            }
            return oracle_blocks(g);
        },
        py::arg("n"), py::arg("edges"),
        "From-scratch block partition, one deletion test per edge.");
}
