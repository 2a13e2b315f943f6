/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <imtw/random_instances.hh>

#include <algorithm>
#include <numeric>

using std::vector;

namespace imtw
{
    auto uniform_int(Random & rng, int low, int high) -> int
    {
        return std::uniform_int_distribution<int>(low, high)(rng);
    }

    auto random_graph(Random & rng, int n, double p) -> Graph
    {
        Graph g(n);
        std::bernoulli_distribution edge(p);
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (edge(rng))
                    g.add_edge(u, v);
        return g;
    }

    auto random_weights(Random & rng, int n, int low, int high, int max_denominator) -> VertexWeights
    {
        vector<Weight> weights;
        for (int v = 0 ; v < n ; ++v) {
            int q = uniform_int(rng, 1, max_denominator);
            int p = uniform_int(rng, low * q, high * q);
            weights.emplace_back(p, q);
        }
        return VertexWeights(std::move(weights));
    }

    auto random_decomposition(Random & rng, const Graph & g) -> TreeDecomposition
    {
        auto ordering = g.vertices().to_vector();
        std::shuffle(ordering.begin(), ordering.end(), rng);
        auto td = decomposition_from_ordering(g, ordering);

        auto random_subset = [&] (VertexSet s) {
            VertexSet result;
            for (int v : s)
                if (uniform_int(rng, 0, 1))
                    result.insert(v);
            return result;
        };

        int extras = uniform_int(rng, 0, td.node_count());
        for (int i = 0 ; i < extras ; ++i) {
            if (uniform_int(rng, 0, 1) && ! td.edges.empty()) {
                // subdivide an edge with a bag between the two endpoints' intersection and one of them
                auto e = uniform_int(rng, 0, int(td.edges.size()) - 1);
                auto [s, t] = td.edges[e];
                VertexSet common = td.bags[s] & td.bags[t];
                VertexSet side = uniform_int(rng, 0, 1) ? td.bags[s] : td.bags[t];
                int m = td.add_node(common | random_subset(side - common));
                td.edges[e] = { s, m };
                td.add_edge(m, t);
            }
            else {
                int s = uniform_int(rng, 0, td.node_count() - 1);
                int m = td.add_node(random_subset(td.bags[s]));
                td.add_edge(s, m);
            }
        }
        return td;
    }

    auto random_binary_decomposition(Random & rng, const Graph & g) -> TreeDecomposition
    {
        auto td = random_decomposition(rng, g);
        td.root = uniform_int(rng, 0, td.node_count() - 1);
        auto tree = root_tree(td);

        TreeDecomposition result;
        result.bags = td.bags;
        result.root = td.root;
        for (int s = 0 ; s < td.node_count() ; ++s) {
            auto children = tree.children[s];
            std::shuffle(children.begin(), children.end(), rng);
            // while more than two children remain, give the current node one child and a copy of s
            int attach = s;
            for (unsigned i = 0 ; i < children.size() ; ++i) {
                result.add_edge(attach, children[i]);
                if (children.size() - i > 2) {
                    int copy = result.add_node(td.bags[s]);
                    result.add_edge(attach, copy);
                    attach = copy;
                }
            }
        }
        return result;
    }

    auto random_maximal_matching(Random & rng, const Graph & g) -> Matching
    {
        auto edges = g.edges();
        std::shuffle(edges.begin(), edges.end(), rng);
        Matching result;
        VertexSet used;
        for (auto & e : edges)
            if (! used.contains(e.u) && ! used.contains(e.v)) {
                result.push_back(e);
                used.insert(e.u);
                used.insert(e.v);
            }
        return result;
    }
}
