/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <imtw/graph.hh>
#include <imtw/errors.hh>

using std::pair;
using std::to_string;
using std::vector;

namespace imtw
{
    Graph::Graph(int n) :
        _capacity(n),
        _vertices(VertexSet::range(n)),
        _adjacency(n)
    {
    }

    auto Graph::add_edge(int u, int v) -> bool
    {
        if (! has_vertex(u) || ! has_vertex(v))
            throw ContractError("edge " + to_string(u) + "-" + to_string(v) + " has an endpoint outside the graph");
        if (u == v)
            throw ContractError("self-loop at vertex " + to_string(u));
        if (_adjacency[u].contains(v))
            return false;
        _adjacency[u].insert(v);
        _adjacency[v].insert(u);
        return true;
    }

    auto Graph::neighbourhood(VertexSet x) const -> VertexSet
    {
        VertexSet result;
        for (int v : x)
            result |= _adjacency[v];
        return result - x;
    }

    auto Graph::closed_neighbourhood(VertexSet x) const -> VertexSet
    {
        return neighbourhood(x) | x;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (int u : _vertices)
            for (int v : _adjacency[u])
                if (u < v)
                    result.push_back(Edge{ u, v });
        return result;
    }

    auto Graph::edge_count() const -> int
    {
        int twice = 0;
        for (int v : _vertices)
            twice += _adjacency[v].size();
        return twice / 2;
    }

    auto Graph::has_edge_within(VertexSet x) const -> bool
    {
        for (int v : x)
            if (_adjacency[v].intersects(x))
                return true;
        return false;
    }

    auto Graph::check_subset(VertexSet x) const -> void
    {
        if (! x.subset_of(_vertices))
            throw ContractError("vertex set " + x.to_string() + " is not contained in the graph's vertex set " + _vertices.to_string());
    }

    auto induced_subgraph(const Graph & g, VertexSet x) -> Graph
    {
        g.check_subset(x);
        Graph result = g;
        result._vertices = x;
        for (int v = 0 ; v < g._capacity ; ++v)
            result._adjacency[v] = x.contains(v) ? (g._adjacency[v] & x) : VertexSet{};
        return result;
    }

    auto make_graph(int n, const vector<pair<int, int>> & edges) -> Graph
    {
        Graph g(n);
        for (auto & [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }
}
