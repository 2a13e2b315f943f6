/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef IMTW_GUARD_GRAPH_HH
#define IMTW_GUARD_GRAPH_HH 1

#include <imtw/vertex_set.hh>

#include <compare>
#include <utility>
#include <vector>

namespace imtw
{
    struct Edge
    {
        int u, v;

        constexpr auto operator<=> (const Edge &) const = default;
    };

    using Matching = std::vector<Edge>;

    /**
     * A simple undirected graph whose vertices are a subset of 0..capacity-1.
     *
     * A freshly built graph on n vertices has vertex set {0..n-1}. Induced
     * subgraphs keep the original ids and only shrink the vertex set, so sets
     * taken in different subgraphs can be intersected without relabelling.
     */
    class Graph
    {
        private:
            int _capacity = 0;
            VertexSet _vertices;
            std::vector<VertexSet> _adjacency;

        public:
            Graph() = default;
            explicit Graph(int n);

            /// Adds uv. Returns false (and changes nothing) if uv is already present.
            auto add_edge(int u, int v) -> bool;

            /// One more than the largest admissible vertex id.
            auto capacity() const -> int { return _capacity; }
            auto vertices() const -> VertexSet { return _vertices; }
            auto order() const -> int { return _vertices.size(); }

            auto has_vertex(int v) const -> bool { return _vertices.contains(v); }
            auto neighbours(int v) const -> VertexSet { return _adjacency[v]; }
            auto adjacent(int u, int v) const -> bool { return _adjacency[u].contains(v); }
            auto degree(int v) const -> int { return _adjacency[v].size(); }

            /// N(X): vertices outside X with a neighbour in X.
            auto neighbourhood(VertexSet x) const -> VertexSet;

            /// N[X] = N(X) ∪ X.
            auto closed_neighbourhood(VertexSet x) const -> VertexSet;

            /// Edges with u < v, sorted.
            auto edges() const -> std::vector<Edge>;
            auto edge_count() const -> int;

            /// True if some edge has both ends in x.
            auto has_edge_within(VertexSet x) const -> bool;

            /// Throws ContractError unless x is a subset of the vertex set.
            auto check_subset(VertexSet x) const -> void;

            auto operator== (const Graph &) const -> bool = default;

            friend auto induced_subgraph(const Graph & g, VertexSet x) -> Graph;
    };

    /// G[X], keeping original vertex ids.
    auto induced_subgraph(const Graph & g, VertexSet x) -> Graph;

    auto make_graph(int n, const std::vector<std::pair<int, int>> & edges) -> Graph;
}

#endif
