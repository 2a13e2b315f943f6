/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <imtw/graph_algorithms.hh>
#include <imtw/errors.hh>

#include <algorithm>
#include <functional>
#include <limits>

using std::function;
using std::max;
using std::min;
using std::to_string;
using std::vector;

namespace imtw
{
    auto is_independent_set(const Graph & g, VertexSet x) -> bool
    {
        g.check_subset(x);
        return ! g.has_edge_within(x);
    }

    auto maximal_independent_sets(const Graph & g, const Guards & guards) -> vector<VertexSet>
    {
        vector<VertexSet> result;

        // Bron-Kerbosch with pivoting, run on the complement graph
        function<void (VertexSet, VertexSet, VertexSet)> expand = [&] (VertexSet r, VertexSet p, VertexSet x) {
            if (p.empty() && x.empty()) {
                if (std::ssize(result) >= guards.max_independent_sets)
                    throw ResourceError("more than " + to_string(guards.max_independent_sets) + " maximal independent sets");
                result.push_back(r);
                return;
            }

            // choose the pivot leaving the fewest branches, i.e. with most non-neighbours in p
            int pivot = -1, best = -1;
            for (int u : p | x) {
                int c = (p - g.neighbours(u)).without(u).size();
                if (c > best) {
                    best = c;
                    pivot = u;
                }
            }

            // branch on p minus the pivot's non-neighbours (pivot itself included)
            VertexSet branch = (p & g.neighbours(pivot));
            if (p.contains(pivot))
                branch.insert(pivot);
            for (int v : branch) {
                VertexSet non_adjacent = (g.vertices() - g.neighbours(v)).without(v);
                expand(r.with(v), p & non_adjacent, x & non_adjacent);
                p.erase(v);
                x.insert(v);
            }
        };

        expand(VertexSet{}, g.vertices(), VertexSet{});
        return result;
    }

    auto check_matching(const Graph & g, const Matching & m) -> void
    {
        VertexSet used;
        for (auto & e : m) {
            if (! g.has_vertex(e.u) || ! g.has_vertex(e.v) || ! g.adjacent(e.u, e.v))
                throw ContractError("pair " + to_string(e.u) + "-" + to_string(e.v) + " is not an edge of the graph");
            if (used.contains(e.u) || used.contains(e.v))
                throw ContractError("edges of the matching share endpoint(s) at " + to_string(e.u) + "-" + to_string(e.v));
            used.insert(e.u);
            used.insert(e.v);
        }
    }

    auto is_induced_matching(const Graph & g, const Matching & m) -> bool
    {
        check_matching(g, m);
        VertexSet ends;
        for (auto & e : m) {
            ends.insert(e.u);
            ends.insert(e.v);
        }
        return induced_subgraph(g, ends).edge_count() == int(m.size());
    }

    namespace
    {
        auto edges_touching(const Graph & g, VertexSet x) -> vector<Edge>
        {
            vector<Edge> result;
            for (auto & e : g.edges())
                if (x.contains(e.u) || x.contains(e.v))
                    result.push_back(e);
            return result;
        }

        // largest induced matching whose edges are listed in `partners` and have both
        // endpoints in `allowed`
        auto max_induced_matching(const Graph & g, const vector<VertexSet> & partners, VertexSet allowed) -> int
        {
            // pick the smallest vertex still having a usable edge
            int u = -1;
            for (int v : allowed)
                if ((partners[v] & allowed).size() > 0) {
                    u = v;
                    break;
                }
            if (-1 == u)
                return 0;

            // either u is not matched ...
            int best = max_induced_matching(g, partners, allowed.without(u));

            // ... or it is matched to one of its usable partners, which blocks the closed
            // neighbourhoods of both endpoints
            for (int v : partners[u] & allowed) {
                VertexSet blocked = g.closed_neighbourhood(VertexSet{ u, v });
                best = max(best, 1 + max_induced_matching(g, partners, allowed - blocked));
            }
            return best;
        }
    }

    auto mu_of_set(const Graph & g, VertexSet x, const Guards & guards) -> int
    {
        g.check_subset(x);
        auto edges = edges_touching(g, x);
        if (std::ssize(edges) > guards.max_matching_edges * 4)
            throw ResourceError("too many edges (" + to_string(edges.size()) + ") for exhaustive induced matching search");

        vector<VertexSet> partners(g.capacity());
        for (auto & e : edges) {
            partners[e.u].insert(e.v);
            partners[e.v].insert(e.u);
        }
        return max_induced_matching(g, partners, g.vertices());
    }

    auto mu_of_set_by_edge_subsets(const Graph & g, VertexSet x, const Guards & guards) -> int
    {
        g.check_subset(x);
        auto edges = edges_touching(g, x);
        if (edges.size() > 24 || int(edges.size()) > guards.max_matching_edges)
            throw ResourceError("too many edges (" + to_string(edges.size()) + ") for edge subset enumeration");

        int best = 0;
        for (unsigned long long mask = 0 ; mask < (1ULL << edges.size()) ; ++mask) {
            int count = std::popcount(mask);
            if (count <= best)
                continue;
            VertexSet ends;
            bool ok = true;
            for (unsigned i = 0 ; i < edges.size() && ok ; ++i)
                if (mask & (1ULL << i)) {
                    if (ends.contains(edges[i].u) || ends.contains(edges[i].v))
                        ok = false;
                    ends.insert(edges[i].u);
                    ends.insert(edges[i].v);
                }
            if (ok && induced_subgraph(g, ends).edge_count() == count)
                best = count;
        }
        return best;
    }

    auto refine_to_induced_matching(const Graph & g, const Matching & m, const Guards & guards) -> Matching
    {
        check_matching(g, m);
        if (int(m.size()) > guards.max_matching_edges)
            throw ResourceError("matching of size " + to_string(m.size()) + " too large to refine exhaustively");

        Matching best, current;
        function<void (unsigned, VertexSet)> search = [&] (unsigned i, VertexSet blocked) {
            if (current.size() + (m.size() - i) <= best.size())
                return;
            if (i == m.size()) {
                best = current;
                return;
            }
            auto & e = m[i];
            if (! blocked.contains(e.u) && ! blocked.contains(e.v)) {
                current.push_back(e);
                search(i + 1, blocked | g.closed_neighbourhood(VertexSet{ e.u, e.v }));
                current.pop_back();
            }
            search(i + 1, blocked);
        };
        search(0, VertexSet{});
        return best;
    }

    namespace
    {
        struct EliminationTable
        {
            vector<int> vertices;
            vector<signed char> width;
            vector<signed char> last;
        };

        // vertices outside s ∪ {v} reachable from v through s, in compressed indices
        auto q_size(const vector<std::uint32_t> & adj, std::uint32_t s, int v) -> int
        {
            std::uint32_t seen = (1u << v), frontier = (1u << v), outside = 0;
            while (frontier) {
                int u = std::countr_zero(frontier);
                frontier &= frontier - 1;
                std::uint32_t n = adj[u] & ~seen;
                seen |= n;
                outside |= n & ~s;
                frontier |= n & s;
            }
            return std::popcount(outside);
        }

        auto build_elimination_table(const Graph & g, const Guards & guards) -> EliminationTable
        {
            EliminationTable t;
            t.vertices = g.vertices().to_vector();
            int n = t.vertices.size();
            if (n > guards.max_exponential_n || n > 30)
                throw ResourceError("graph with " + to_string(n) + " vertices exceeds the exact treewidth guard of " + to_string(guards.max_exponential_n));

            vector<int> index(g.capacity(), -1);
            for (int i = 0 ; i < n ; ++i)
                index[t.vertices[i]] = i;
            vector<std::uint32_t> adj(n, 0);
            for (int i = 0 ; i < n ; ++i)
                for (int u : g.neighbours(t.vertices[i]))
                    adj[i] |= 1u << index[u];

            std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
            t.width.assign(std::size_t{ full } + 1, 0);
            t.last.assign(std::size_t{ full } + 1, -1);
            t.width[0] = -1;
            for (std::uint32_t s = 1 ; s != 0 && s <= full ; ++s) {
                int best = std::numeric_limits<int>::max();
                for (std::uint32_t rest = s ; rest ; rest &= rest - 1) {
                    int v = std::countr_zero(rest);
                    std::uint32_t without = s & ~(1u << v);
                    int cost = max<int>(t.width[without], q_size(adj, without, v));
                    if (cost < best) {
                        best = cost;
                        t.last[s] = v;
                    }
                }
                t.width[s] = best;
                if (s == full)
                    break;
            }
            return t;
        }
    }

    auto treewidth_exact(const Graph & g, const Guards & guards) -> int
    {
        if (g.order() == 0)
            return -1;
        auto t = build_elimination_table(g, guards);
        return t.width.back();
    }

    auto optimal_elimination_ordering(const Graph & g, const Guards & guards) -> vector<int>
    {
        if (g.order() == 0)
            return {};
        auto t = build_elimination_table(g, guards);
        vector<int> reversed;
        std::uint32_t s = t.width.size() - 1;
        while (s) {
            int v = t.last[s];
            reversed.push_back(t.vertices[v]);
            s &= ~(1u << v);
        }
        return vector<int>(reversed.rbegin(), reversed.rend());
    }

    auto treewidth_at_most(const Graph & g, VertexSet x, int w, const Guards & guards) -> bool
    {
        if (x.empty())
            return w >= -1;
        if (w < 0)
            return false;
        auto h = induced_subgraph(g, x);
        if (w == 0)
            return h.edge_count() == 0;
        if (w == 1)
            return ! has_cycle(h);
        if (h.edge_count() > x.size() * w)
            return false;
        return treewidth_exact(h, guards) <= w;
    }

    auto minimum_vertex_cover(const vector<Edge> & edges, const Guards & guards) -> VertexSet
    {
        VertexSet endpoints;
        for (auto & e : edges) {
            endpoints.insert(e.u);
            endpoints.insert(e.v);
        }
        auto candidates = endpoints.to_vector();
        int m = candidates.size();
        if (m > guards.max_exponential_n + 10)
            throw ResourceError("too many vertices (" + to_string(m) + ") for exact vertex cover");

        auto covers = [&] (VertexSet c) {
            for (auto & e : edges)
                if (! c.contains(e.u) && ! c.contains(e.v))
                    return false;
            return true;
        };

        // sizes in increasing order; within a size, combinations in lexicographic order
        for (int k = 0 ; k <= m ; ++k) {
            vector<bool> pick(m, false);
            std::fill(pick.begin(), pick.begin() + k, true);
            do {
                VertexSet c;
                for (int i = 0 ; i < m ; ++i)
                    if (pick[i])
                        c.insert(candidates[i]);
                if (covers(c))
                    return c;
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
        throw InternalError("vertex cover search exhausted without a cover");
    }

    auto connected_components(const Graph & g) -> vector<VertexSet>
    {
        vector<VertexSet> result;
        VertexSet unseen = g.vertices();
        while (! unseen.empty()) {
            VertexSet component = VertexSet::singleton(unseen.first()), frontier = component;
            while (! frontier.empty()) {
                VertexSet next;
                for (int v : frontier)
                    next |= g.neighbours(v);
                next -= component;
                component |= next;
                frontier = next;
            }
            unseen -= component;
            result.push_back(component);
        }
        return result;
    }

    auto has_cycle(const Graph & g) -> bool
    {
        return g.edge_count() > g.order() - int(connected_components(g).size());
    }
}
