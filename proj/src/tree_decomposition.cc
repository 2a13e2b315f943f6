/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <imtw/tree_decomposition.hh>
#include <imtw/graph_algorithms.hh>
#include <imtw/errors.hh>

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

using std::max;
using std::pair;
using std::string;
using std::to_string;
using std::vector;

namespace imtw
{
    auto TreeDecomposition::add_node(VertexSet bag) -> int
    {
        bags.push_back(bag);
        return int(bags.size()) - 1;
    }

    auto TreeDecomposition::add_edge(int s, int t) -> void
    {
        edges.emplace_back(s, t);
    }

    auto TreeDecomposition::adjacency() const -> vector<vector<int>>
    {
        vector<vector<int>> result(bags.size());
        for (auto & [s, t] : edges) {
            result.at(s).push_back(t);
            result.at(t).push_back(s);
        }
        for (auto & r : result)
            std::sort(r.begin(), r.end());
        return result;
    }

    auto violation_kind_name(ViolationKind k) -> string
    {
        switch (k) {
            case ViolationKind::not_a_tree:          return "not-a-tree";
            case ViolationKind::bag_outside_graph:   return "bag-outside-graph";
            case ViolationKind::missing_vertex:      return "vertex-condition";
            case ViolationKind::uncovered_edge:      return "edge-condition";
            case ViolationKind::disconnected_vertex: return "connectedness-condition";
            case ViolationKind::structure:           return "structure";
        }
        return "unknown";
    }

    auto ValidationReport::add(ViolationKind kind, string message, vector<int> witness) -> void
    {
        violations.push_back(Violation{ kind, std::move(message), std::move(witness) });
    }

    auto ValidationReport::count(ViolationKind kind) const -> int
    {
        return std::count_if(violations.begin(), violations.end(), [&] (const Violation & v) { return v.kind == kind; });
    }

    auto ValidationReport::append(const ValidationReport & other) -> void
    {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }

    auto ValidationReport::to_string() const -> string
    {
        string result;
        for (auto & v : violations)
            result += violation_kind_name(v.kind) + ": " + v.message + "\n";
        return result;
    }

    namespace
    {
        struct UnionFind
        {
            vector<int> parent;

            explicit UnionFind(int n) : parent(n)
            {
                std::iota(parent.begin(), parent.end(), 0);
            }

            auto find(int x) -> int
            {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            }

            auto unite(int a, int b) -> bool
            {
                a = find(a);
                b = find(b);
                if (a == b)
                    return false;
                parent[a] = b;
                return true;
            }
        };

        auto check_tree(const TreeDecomposition & t, ValidationReport & report) -> bool
        {
            int n = t.node_count();
            if (0 == n) {
                report.add(ViolationKind::not_a_tree, "decomposition has no nodes");
                return false;
            }
            UnionFind uf(n);
            bool ok = true;
            for (auto & [s, u] : t.edges) {
                if (s < 0 || s >= n || u < 0 || u >= n) {
                    report.add(ViolationKind::not_a_tree, "tree edge " + to_string(s) + "-" + to_string(u) + " has an endpoint out of range", { s, u });
                    ok = false;
                }
                else if (! uf.unite(s, u)) {
                    report.add(ViolationKind::not_a_tree, "tree edge " + to_string(s) + "-" + to_string(u) + " closes a cycle", { s, u });
                    ok = false;
                }
            }
            if (ok && int(t.edges.size()) != n - 1) {
                report.add(ViolationKind::not_a_tree, "tree is disconnected: " + to_string(t.edges.size()) + " edges on " + to_string(n) + " nodes");
                ok = false;
            }
            if (ok && t.root != -1 && (t.root < 0 || t.root >= n)) {
                report.add(ViolationKind::not_a_tree, "root " + to_string(t.root) + " out of range", { t.root });
                ok = false;
            }
            return ok;
        }
    }

    auto validate(const Graph & g, const TreeDecomposition & t) -> ValidationReport
    {
        ValidationReport report;
        bool tree_ok = check_tree(t, report);

        VertexSet covered;
        for (int i = 0 ; i < t.node_count() ; ++i) {
            if (! t.bags[i].subset_of(g.vertices()))
                report.add(ViolationKind::bag_outside_graph, "bag of node " + to_string(i) + " contains " + (t.bags[i] - g.vertices()).to_string()
                        + ", which are not vertices of the graph", { i });
            covered |= t.bags[i];
        }

        for (int v : g.vertices() - covered)
            report.add(ViolationKind::missing_vertex, "vertex " + to_string(v) + " is in no bag", { v });

        for (auto & e : g.edges()) {
            VertexSet both{ e.u, e.v };
            if (std::none_of(t.bags.begin(), t.bags.end(), [&] (VertexSet b) { return both.subset_of(b); }))
                report.add(ViolationKind::uncovered_edge, "edge (" + to_string(e.u) + "," + to_string(e.v) + ") is in no bag", { e.u, e.v });
        }

        if (tree_ok) {
            // the nodes holding v induce a subforest, connected iff it has one edge fewer than nodes
            for (int v : covered & g.vertices()) {
                int nodes = 0, edges = 0;
                for (auto & b : t.bags)
                    if (b.contains(v))
                        ++nodes;
                for (auto & [s, u] : t.edges)
                    if (t.bags[s].contains(v) && t.bags[u].contains(v))
                        ++edges;
                if (edges != nodes - 1)
                    report.add(ViolationKind::disconnected_vertex, "nodes containing vertex " + to_string(v) + " are not connected", { v });
            }
        }

        return report;
    }

    auto width(const TreeDecomposition & t) -> int
    {
        if (0 == t.node_count())
            throw StructureError("width of a decomposition with no nodes is undefined");
        int result = -1;
        for (auto & b : t.bags)
            result = max(result, b.size() - 1);
        return result;
    }

    auto mu_width(const Graph & g, const TreeDecomposition & t, const Guards & guards) -> int
    {
        int result = 0;
        for (auto & b : t.bags)
            result = max(result, mu_of_set(g, b, guards));
        return result;
    }

    auto root_tree(const TreeDecomposition & t) -> RootedTree
    {
        int n = t.node_count();
        if (t.root < 0 || t.root >= n)
            throw StructureError("decomposition has no valid root");
        if (int(t.edges.size()) != n - 1)
            throw StructureError("decomposition edges do not form a tree");

        auto adj = t.adjacency();
        RootedTree r;
        r.root = t.root;
        r.parent.assign(n, -2);
        r.children.assign(n, {});
        r.parent[t.root] = -1;

        vector<int> preorder{ t.root };
        preorder.reserve(n);
        for (unsigned i = 0 ; i < preorder.size() ; ++i) {
            int s = preorder[i];
            for (int u : adj[s]) {
                if (u == r.parent[s])
                    continue;
                if (r.parent[u] != -2)
                    throw StructureError("decomposition edges do not form a tree");
                r.parent[u] = s;
                r.children[s].push_back(u);
                preorder.push_back(u);
            }
        }
        if (int(preorder.size()) != n)
            throw StructureError("decomposition tree is disconnected");

        r.postorder.assign(preorder.rbegin(), preorder.rend());
        return r;
    }

    auto decomposition_from_ordering(const Graph & g, const vector<int> & ordering) -> TreeDecomposition
    {
        if (VertexSet::from_vector(ordering) != g.vertices() || int(ordering.size()) != g.order())
            throw ContractError("elimination ordering is not a permutation of the vertex set");

        TreeDecomposition result;
        if (ordering.empty()) {
            result.add_node(VertexSet{});
            return result;
        }

        vector<int> position(g.capacity(), -1);
        for (int i = 0 ; i < int(ordering.size()) ; ++i)
            position[ordering[i]] = i;

        vector<VertexSet> adj(g.capacity());
        for (int v : g.vertices())
            adj[v] = g.neighbours(v);

        vector<int> parent_vertex(g.capacity(), -1);
        for (int v : ordering) {
            VertexSet later = adj[v];
            result.add_node(later.with(v));
            for (int u : later)
                adj[u] = (adj[u] | later).without(u).without(v);
            int parent = -1;
            for (int u : later)
                if (-1 == parent || position[u] < position[parent])
                    parent = u;
            parent_vertex[v] = parent;
        }

        int previous_root = -1;
        for (int i = 0 ; i < int(ordering.size()) ; ++i) {
            int p = parent_vertex[ordering[i]];
            if (-1 != p)
                result.add_edge(i, position[p]);
            else {
                if (-1 != previous_root)
                    result.add_edge(previous_root, i);
                previous_root = i;
            }
        }
        return result;
    }

    auto optimal_width_decomposition(const Graph & g, const Guards & guards) -> TreeDecomposition
    {
        return decomposition_from_ordering(g, optimal_elimination_ordering(g, guards));
    }

    auto trivial_decomposition(const Graph & g) -> TreeDecomposition
    {
        TreeDecomposition result;
        result.add_node(g.vertices());
        return result;
    }

    auto mu_width_search_decomposition(const Graph & g, const Guards & guards) -> TreeDecomposition
    {
        auto vertices = g.vertices().to_vector();
        int n = vertices.size();
        if (n > guards.max_exponential_n || n > 30)
            throw ResourceError("graph with " + to_string(n) + " vertices exceeds the decomposition search guard of " + to_string(guards.max_exponential_n));
        if (0 == n)
            return decomposition_from_ordering(g, {});

        std::unordered_map<VertexSet, int, VertexSetHash> mu_cache;
        auto key_of = [&] (VertexSet bag) -> long long {
            auto it = mu_cache.find(bag);
            if (it == mu_cache.end())
                it = mu_cache.emplace(bag, mu_of_set(g, bag, guards)).first;
            return static_cast<long long>(it->second) * (n + 2) + bag.size();
        };

        // bag of v when eliminated after exactly the vertices of s
        auto bag_of = [&] (std::uint32_t s, int v) -> VertexSet {
            VertexSet inside, seen = VertexSet::singleton(vertices[v]), frontier = seen, bag = seen;
            for (int i = 0 ; i < n ; ++i)
                if (s & (1u << i))
                    inside.insert(vertices[i]);
            while (! frontier.empty()) {
                VertexSet next;
                for (int u : frontier)
                    next |= g.neighbours(u);
                next -= seen;
                seen |= next;
                bag |= next - inside;
                frontier = next & inside;
            }
            return bag;
        };

        std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
        vector<long long> cost(std::size_t{ full } + 1, 0);
        vector<signed char> last(std::size_t{ full } + 1, -1);
        for (std::uint32_t s = 1 ; ; ++s) {
            long long best = std::numeric_limits<long long>::max();
            for (std::uint32_t rest = s ; rest ; rest &= rest - 1) {
                int v = std::countr_zero(rest);
                std::uint32_t without = s & ~(1u << v);
                long long c = max(cost[without], key_of(bag_of(without, v)));
                if (c < best) {
                    best = c;
                    last[s] = v;
                }
            }
            cost[s] = best;
            if (s == full)
                break;
        }

        vector<int> reversed;
        for (std::uint32_t s = full ; s ; s &= ~(1u << last[s]))
            reversed.push_back(vertices[last[s]]);
        return decomposition_from_ordering(g, vector<int>(reversed.rbegin(), reversed.rend()));
    }
}
