/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <imtw/automata.hh>
#include <imtw/errors.hh>
#include <imtw/formats.hh>
#include <imtw/oracle.hh>
#include <imtw/pipeline.hh>
#include <imtw/selfcheck.hh>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;

using std::optional;
using std::pair;
using std::string;
using std::vector;

namespace
{
    auto make_graph(int n, const vector<pair<int, int>> & edges) -> imtw::Graph
    {
        imtw::Graph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    auto make_weights(int n, const optional<vector<string>> & weights) -> imtw::VertexWeights
    {
        if (! weights)
            return imtw::VertexWeights(n);
        if (int(weights->size()) != n)
            throw imtw::ContractError("need one weight per vertex");
        vector<imtw::Weight> parsed;
        for (auto & w : *weights)
            parsed.push_back(imtw::parse_weight(w));
        return imtw::VertexWeights(std::move(parsed));
    }

    auto result_dict(const string & status, const optional<imtw::Solution> & s) -> py::dict
    {
        py::dict result;
        result["status"] = status;
        if (s) {
            result["weight"] = imtw::weight_to_fraction_string(s->weight);
            result["solution"] = s->vertices.to_vector();
        }
        return result;
    }

    auto solve(int n, const vector<pair<int, int>> & edges, const optional<vector<string>> & weights,
            const string & problem, const string & td_source, optional<int> w, optional<int> k,
            const string & family_mode) -> py::dict
    {
        auto g = make_graph(n, edges);
        auto vw = make_weights(n, weights);
        auto td = imtw::acquire_decomposition(g, imtw::parse_decomposition_source(td_source));
        imtw::SolveOptions options;
        options.preset = problem;
        options.w = w;
        options.k = k;
        options.family_mode = imtw::parse_family_mode(family_mode);
        auto report = imtw::solve_pipeline(g, vw, td, options);
        auto result = result_dict(imtw::solve_status_name(report.status), report.solution);
        result["mu"] = report.mu;
        result["ell"] = report.ell;
        return result;
    }

    auto oracle(int n, const vector<pair<int, int>> & edges, const optional<vector<string>> & weights,
            const string & problem) -> py::dict
    {
        auto g = make_graph(n, edges);
        auto best = imtw::brute_force_optimal(g, make_weights(n, weights), imtw::problem_spec(problem));
        return result_dict(best ? "optimal" : "infeasible", best);
    }

    auto parse_gr(const string & text) -> pair<int, vector<pair<int, int>>>
    {
        auto g = imtw::parse_gr(text);
        vector<pair<int, int>> edges;
        for (auto & e : g.edges())
            edges.emplace_back(e.u, e.v);
        return { g.capacity(), edges };
    }

    auto emit_gr(int n, const vector<pair<int, int>> & edges) -> string
    {
        return imtw::emit_gr(make_graph(n, edges));
    }

    auto selfcheck(std::uint64_t seed, int budget) -> vector<py::dict>
    {
        imtw::SelfcheckOptions options;
        options.seed = seed;
        options.budget = budget;
        vector<py::dict> result;
        for (auto & r : imtw::selfcheck(options)) {
            py::dict d;
            d["name"] = r.name;
            d["passed"] = r.passed;
            d["failed"] = r.failed;
            d["first_failure"] = r.first_failure;
            result.push_back(d);
        }
        return result;
    }
}

PYBIND11_MODULE(_imtw, m)
{
    m.doc() = "Maximum-weight induced subgraphs of bounded treewidth";

    py::register_exception<imtw::ContractError>(m, "ContractError", PyExc_ValueError);
    py::register_exception<imtw::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<imtw::StructureError>(m, "StructureError", PyExc_ValueError);
    py::register_exception<imtw::ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    m.def("solve", &solve, py::arg("n"), py::arg("edges"), py::arg("weights") = py::none(),
            py::arg("problem") = "mwis", py::arg("td_source") = "search", py::arg("w") = py::none(),
            py::arg("k") = py::none(), py::arg("family_mode") = "bounded",
            "Solves exactly; vertices are 0-indexed and weights are strings such as \"-7/2\".");
    m.def("oracle", &oracle, py::arg("n"), py::arg("edges"), py::arg("weights") = py::none(),
            py::arg("problem") = "mwis", "Solves by exhaustive search.");
    m.def("parse_gr", &parse_gr, py::arg("text"), "Returns (n, edges) with 0-indexed endpoints.");
    m.def("emit_gr", &emit_gr, py::arg("n"), py::arg("edges"));
    m.def("problems", &imtw::preset_names);
    m.def("selfcheck", &selfcheck, py::arg("seed") = 1, py::arg("budget") = 10);
}
