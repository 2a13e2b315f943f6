/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef IMTW_GUARD_ORACLE_HH
#define IMTW_GUARD_ORACLE_HH 1

#include <imtw/graph.hh>
#include <imtw/guards.hh>
#include <imtw/vertex_set.hh>
#include <imtw/weights.hh>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace imtw
{
    /// A property of graphs, evaluated on the induced subgraph G[x].
    using Checker = std::function<auto (const Graph &, VertexSet) -> bool>;

    auto is_edgeless(const Graph & g, VertexSet x) -> bool;
    auto is_forest(const Graph & g, VertexSet x) -> bool;
    /// Nonempty and connected.
    auto is_connected(const Graph & g, VertexSet x) -> bool;
    /// Nonempty, connected and 2-regular.
    auto is_cycle(const Graph & g, VertexSet x) -> bool;
    /// Nonempty, connected, acyclic, maximum degree at most 2. A single vertex is a path.
    auto is_path(const Graph & g, VertexSet x) -> bool;
    auto max_degree_le(const Graph & g, VertexSet x, int d) -> bool;
    auto degree_exactly(const Graph & g, VertexSet x, int d) -> bool;

    /// The direct checker for one factor name, as accepted by make_factor.
    auto factor_checker(const std::string & spec) -> Checker;

    /// A preset with optional extra factors, and its treewidth bound.
    struct ProblemSpec
    {
        std::string preset;
        int w;
        std::vector<std::string> extras;

        auto checker() const -> Checker;
    };

    /// The spec for a preset with its default treewidth bound.
    auto problem_spec(const std::string & preset, const std::vector<std::string> & extras = {}) -> ProblemSpec;

    struct Solution
    {
        VertexSet vertices;
        Weight weight;

        auto operator== (const Solution &) const -> bool = default;
    };

    /// Exhaustive search for the heaviest feasible set, ties broken by lex_larger.
    auto brute_force_optimal(const Graph & g, const VertexWeights & weights, const ProblemSpec & spec,
            const Guards & guards = Guards{}) -> std::optional<Solution>;

    struct FeasibilityReport
    {
        bool treewidth_ok = false;
        bool checker_ok = false;
        Weight weight;
        std::string reason;

        auto ok() const -> bool { return treewidth_ok && checker_ok; }
    };

    auto feasibility_check(const Graph & g, const VertexWeights & weights, const ProblemSpec & spec, VertexSet x,
            const Guards & guards = Guards{}) -> FeasibilityReport;
}

#endif
