/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef IMTW_GUARD_GRAPH_ALGORITHMS_HH
#define IMTW_GUARD_GRAPH_ALGORITHMS_HH 1

#include <imtw/graph.hh>
#include <imtw/guards.hh>
#include <imtw/vertex_set.hh>

#include <vector>

namespace imtw
{
    auto is_independent_set(const Graph & g, VertexSet x) -> bool;

    /// Every inclusion-maximal independent set, each once, in the order Bron-Kerbosch finds them.
    auto maximal_independent_sets(const Graph & g, const Guards & guards = Guards{}) -> std::vector<VertexSet>;

    /// Throws ContractError if m is not a matching of g.
    auto check_matching(const Graph & g, const Matching & m) -> void;

    auto is_induced_matching(const Graph & g, const Matching & m) -> bool;

    /// Size of a largest induced matching all of whose edges touch x.
    auto mu_of_set(const Graph & g, VertexSet x, const Guards & guards = Guards{}) -> int;

    /// Same quantity, by enumerating edge subsets instead of growing matchings. Used as a cross-check.
    auto mu_of_set_by_edge_subsets(const Graph & g, VertexSet x, const Guards & guards = Guards{}) -> int;

    /// A largest induced matching contained in m.
    auto refine_to_induced_matching(const Graph & g, const Matching & m, const Guards & guards = Guards{}) -> Matching;

    /**
     * Exact treewidth by dynamic programming over vertex subsets, minimising
     * over elimination orderings. The empty graph has treewidth -1.
     */
    auto treewidth_exact(const Graph & g, const Guards & guards = Guards{}) -> int;

    /// An elimination ordering achieving treewidth_exact.
    auto optimal_elimination_ordering(const Graph & g, const Guards & guards = Guards{}) -> std::vector<int>;

    /// True iff G[x] has treewidth at most w; shortcuts w = 0 and w = 1.
    auto treewidth_at_most(const Graph & g, VertexSet x, int w, const Guards & guards = Guards{}) -> bool;

    /// Exact minimum vertex cover of the given edges, lexicographically first among minimum ones.
    auto minimum_vertex_cover(const std::vector<Edge> & edges, const Guards & guards = Guards{}) -> VertexSet;

    /// Connected components of g, each as a vertex set, ordered by minimum vertex.
    auto connected_components(const Graph & g) -> std::vector<VertexSet>;

    auto has_cycle(const Graph & g) -> bool;
}

#endif
