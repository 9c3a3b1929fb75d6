#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "lgr/error.hpp"
#include "lgr/graph.hpp"
#include "lgr/graph_io.hpp"
#include "lgr/oracle.hpp"
#include "lgr/solvers.hpp"

namespace py = pybind11;

namespace {

using Labels = std::vector<std::vector<int>>;

// Counts can exceed 64 bits; go through the decimal string.
py::object to_pyint(const lgr::Count& c) {
    const std::string digits = c.str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

Labels to_labels(const lgr::Witness& w) {
    Labels out;
    out.reserve(w.size());
    for (lgr::Mask m : w) {
        std::vector<int> layer;
        lgr::for_each_bit(m, [&](int b) { layer.push_back(b + 1); });
        out.push_back(std::move(layer));
    }
    return out;
}

lgr::Witness from_labels(const lgr::LayeredGraph& g, const Labels& labels) {
    if (static_cast<int>(labels.size()) != g.q()) throw py::value_error("witness needs one label list per layer");
    lgr::Witness w;
    for (const auto& layer : labels) {
        lgr::Mask m;
        for (int x : layer) {
            if (x < 1 || x > g.k()) throw py::value_error("label " + std::to_string(x) + " out of range");
            m = m | lgr::Mask::label(x);
        }
        w.push_back(m);
    }
    return w;
}

// None when infeasible, otherwise {"value", "count", "witness"}.
py::object to_py(const lgr::SolveOutcome& out) {
    if (!out.feasible()) return py::none();
    const lgr::Optimum& opt = out.optimum();
    py::dict d;
    d["value"] = opt.value;
    d["count"] = to_pyint(opt.count);
    d["witness"] = opt.witness ? py::cast(to_labels(*opt.witness)) : py::none();
    return d;
}

lgr::ProblemKind kind_of(const std::string& name) {
    auto kind = lgr::parse_problem(name);
    if (!kind) throw py::value_error("unknown problem '" + name + "'");
    return *kind;
}

lgr::Mode mode_of(const std::string& name) {
    auto mode = lgr::parse_mode(name);
    if (!mode) throw py::value_error("unknown mode '" + name + "'");
    return *mode;
}

}  // namespace

PYBIND11_MODULE(_lgr, m) {
    m.doc() = "Layered-graph DP solvers with exact solution counts";

    py::register_exception<lgr::Error>(m, "LgrError", PyExc_ValueError);

    py::class_<lgr::LayeredGraph>(m, "LayeredGraph")
        .def_property_readonly("k", &lgr::LayeredGraph::k)
        .def_property_readonly("q", &lgr::LayeredGraph::q)
        .def_property_readonly("n", &lgr::LayeredGraph::n)
        .def_property_readonly("edge_count", &lgr::LayeredGraph::edge_count)
        .def("__eq__", [](const lgr::LayeredGraph& a, const lgr::LayeredGraph& b) { return a == b; })
        .def("__str__", [](const lgr::LayeredGraph& g) { return lgr::serialize(g); })
        .def("__repr__", [](const lgr::LayeredGraph& g) {
            return "<LayeredGraph k=" + std::to_string(g.k()) + " q=" + std::to_string(g.q()) +
                   " n=" + std::to_string(g.n()) + ">";
        });

    m.def("parse", [](const std::string& text) { return lgr::parse(text); }, py::arg("text"));
    m.def("serialize", &lgr::serialize, py::arg("graph"));
    m.def("gen_full", &lgr::gen_full, py::arg("k"), py::arg("q"));
    m.def("gen_path", &lgr::gen_path, py::arg("q"));
    m.def("gen_random", &lgr::gen_random, py::arg("k"), py::arg("q"), py::arg("intra_density"),
          py::arg("inter_density"), py::arg("seed"));
    m.def("gen_llg", &lgr::gen_llg, py::arg("k"), py::arg("q"), py::arg("intra_density"), py::arg("inter_density"),
          py::arg("seed"));

    m.def(
        "classify",
        [](const lgr::LayeredGraph& g) {
            const lgr::Variant v = lgr::classify(g);
            py::dict d;
            d["llg"] = v.is_llg;
            d["slg"] = v.is_slg;
            d["clg"] = v.is_clg;
            d["full"] = v.is_full;
            return d;
        },
        py::arg("graph"));

    m.def(
        "solve",
        [](const lgr::LayeredGraph& g, const std::string& problem, const std::string& mode, bool witness) {
            const lgr::ProblemKind kind = kind_of(problem);
            const lgr::Mode md = mode_of(mode);
            lgr::SolveOutcome out;
            {
                py::gil_scoped_release release;
                out = lgr::solve(g, kind, md, witness);
            }
            return to_py(out);
        },
        py::arg("graph"), py::arg("problem"), py::arg("mode") = "paper", py::arg("witness") = false);

    m.def(
        "oracle_solve",
        [](const lgr::LayeredGraph& g, const std::string& problem, int max_vertices) {
            const lgr::ProblemKind kind = kind_of(problem);
            lgr::SolveOutcome out;
            {
                py::gil_scoped_release release;
                out = lgr::oracle_solve(g, kind, max_vertices);
            }
            return to_py(out);
        },
        py::arg("graph"), py::arg("problem"), py::arg("max_vertices") = lgr::kDefaultOracleCap);

    m.def(
        "check_witness",
        [](const lgr::LayeredGraph& g, const std::string& problem, const Labels& labels) {
            const lgr::Witness w = from_labels(g, labels);
            return lgr::check_witness(g, kind_of(problem), w);
        },
        py::arg("graph"), py::arg("problem"), py::arg("witness"));
}
