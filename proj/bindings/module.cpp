#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "critideal/critical.hpp"
#include "critideal/families.hpp"
#include "critideal/search.hpp"
#include "critideal/zlinalg.hpp"

namespace py = pybind11;
using namespace critideal;

namespace {

GbBudget make_budget(long pairs) {
    GbBudget b;
    if (pairs > 0) b.max_pair_reductions = pairs;
    return b;
}

std::vector<std::string> ideal_basis_strings(const Graph& g, int i, long budget_pairs) {
    auto gb = strong_groebner(critical_ideal_generators(g, i), make_budget(budget_pairs));
    std::vector<std::string> out;
    for (const auto& p : gb.basis) out.push_back(p.to_string());
    return out;
}

std::vector<long> group_factors(const Graph& g) {
    std::vector<long> out;
    for (const auto& f : critical_group(g).factors) out.push_back(f.get_si());
    return out;
}

}  // namespace

PYBIND11_MODULE(_critideal, m) {
    m.doc() = "critical ideals, algebraic co-rank and critical groups of simple graphs";

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
    py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def_property_readonly("order", &Graph::order)
        .def("add_edge", &Graph::add_edge)
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def("edges", &Graph::edges)
        .def("graph6", [](const Graph& g) { return write_graph6(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(graph6='" + write_graph6(g) + "')";
        });

    m.def("parse_graph6", &parse_graph6, py::arg("text"));
    m.def("write_graph6", &write_graph6, py::arg("graph"));
    m.def("complete", &complete, py::arg("n"));
    m.def("trivial_graph", &trivial_graph, py::arg("n"));
    m.def("path", &path, py::arg("n"));
    m.def("cycle", &cycle, py::arg("n"));
    m.def("complete_multipartite", &complete_multipartite, py::arg("parts"));
    m.def("disjoint_union", &disjoint_union);
    m.def("join", &join);
    m.def("delete_vertex", &delete_vertex);
    m.def("induced_subgraph",
          [](const Graph& g, const std::vector<int>& vertices) {
              VertexSet s = 0;
              for (int v : vertices) {
                  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
                  s |= VertexSet{1} << v;
              }
              return induced_subgraph(g, s);
          },
          py::arg("graph"), py::arg("vertices"));
    m.def("is_connected", &is_connected);
    m.def("clique_number", &clique_number);
    m.def("stability_number", &stability_number);
    m.def("contains_induced", &contains_induced, py::arg("pattern"), py::arg("host"));
    m.def("canonical_form", [](const Graph& g) { return canonical_hex(g); });
    m.def("enumerate_connected", &enumerate_connected, py::arg("n"));

    m.def(
        "gamma",
        [](const Graph& g, long budget, bool exhaustive) {
            GammaReport rep = critideal::gamma(g, make_budget(budget), exhaustive);
            py::list per_index;
            for (const auto& v : rep.per_index) {
                const char* path = "groebner";
                switch (v.path) {
                    case DecisionPath::UnitMinor:
                    case DecisionPath::UnitGenerator: path = "unit-minor"; break;
                    case DecisionPath::ConstantGcd: path = "constant-gcd"; break;
                    case DecisionPath::Evaluation: path = "evaluation"; break;
                    case DecisionPath::Groebner: path = "groebner"; break;
                }
                per_index.append(py::make_tuple(v.index, v.trivial, path));
            }
            py::dict out;
            out["gamma"] = rep.gamma;
            out["connected"] = rep.connected;
            out["per_index"] = per_index;
            return out;
        },
        py::arg("graph"), py::arg("budget") = 0, py::arg("exhaustive") = false);
    m.def("is_gamma_critical",
          [](const Graph& g, long budget) { return is_gamma_critical(g, make_budget(budget)); },
          py::arg("graph"), py::arg("budget") = 0);
    m.def("critical_ideal_trivial",
          [](const Graph& g, int i, long budget) {
              return critical_ideal_trivial(g, i, make_budget(budget));
          },
          py::arg("graph"), py::arg("i"), py::arg("budget") = 0);
    m.def("critical_ideal_generators",
          [](const Graph& g, int i) {
              std::vector<std::string> out;
              for (const auto& p : critical_ideal_generators(g, i)) out.push_back(p.to_string());
              return out;
          },
          py::arg("graph"), py::arg("i"));
    m.def("critical_ideal_basis", &ideal_basis_strings, py::arg("graph"), py::arg("i"),
          py::arg("budget") = 0);

    m.def("phi", &phi, py::arg("weights"));
    m.def("blowup", &blowup, py::arg("graph"), py::arg("weights"));
    m.def("blowup_ideal_trivial", &blowup_ideal_trivial, py::arg("graph"), py::arg("weights"),
          py::arg("j"));

    m.def("laplacian_snf", [](const Graph& g) {
        SnfResult snf = smith_normal_form(laplacian(g));
        std::vector<long> factors;
        for (const auto& f : snf.factors) factors.push_back(f.get_si());
        return py::make_tuple(snf.rank, factors);
    });
    m.def("critical_group_factors", &group_factors, py::arg("graph"));
    m.def("f1", &f1, py::arg("graph"));

    m.def("f3_members", [] {
        py::list out;
        for (const auto& mbr : f3_members()) out.append(py::make_tuple(mbr.name, mbr.graph));
        return out;
    });
    m.def("f3_free", [](const Graph& g) -> py::object {
        auto w = f3_free(g);
        if (!w) return py::none();
        return py::make_tuple(w->name, w->injection);
    });
    m.def("in_family_f1", [](const Graph& g) { return family_member(g, f1_templates()).has_value(); });
    m.def("in_family_f2", [](const Graph& g) { return family_member(g, f2_templates()).has_value(); });

    m.def(
        "find_minimal_forbidden",
        [](const std::vector<Graph>& stream, int k, int jobs) {
            SearchOptions opts;
            opts.jobs = jobs;
            SearchReport rep = find_minimal_forbidden(stream, k, opts);
            py::list hits;
            for (const auto& h : rep.hits)
                hits.append(py::make_tuple(h.graph6, h.gamma, h.gamma_critical));
            py::dict out;
            out["processed"] = rep.processed;
            out["skipped_by_pruning"] = rep.skipped_by_pruning;
            out["hits"] = hits;
            return out;
        },
        py::arg("stream"), py::arg("k"), py::arg("jobs") = 1);
    m.def(
        "verify_omega_classification",
        [](int n_max, int omega, int jobs) {
            SearchOptions opts;
            opts.jobs = jobs;
            VerifyReport rep = verify_omega_classification(n_max, omega, opts);
            return py::make_tuple(rep.checked, rep.counterexamples);
        },
        py::arg("n_max"), py::arg("omega"), py::arg("jobs") = 1);
    m.def(
        "verify_gamma_equals_f3_free",
        [](int n_max, int jobs) {
            SearchOptions opts;
            opts.jobs = jobs;
            VerifyReport rep = verify_gamma_equals_f3_free(n_max, opts);
            return py::make_tuple(rep.checked, rep.counterexamples);
        },
        py::arg("n_max"), py::arg("jobs") = 1);
}
