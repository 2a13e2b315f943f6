/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <imtw/supernice.hh>
#include <imtw/errors.hh>

#include <algorithm>

using std::string;
using std::to_string;
using std::vector;

namespace imtw
{
    auto node_label_name(const NodeLabel & l) -> string
    {
        switch (l.kind) {
            case NodeKind::initial:   return "initial";
            case NodeKind::introduce: return "introduce(" + to_string(l.vertex) + ")";
            case NodeKind::forget:    return "forget(" + to_string(l.vertex) + ")";
            case NodeKind::join:      return "join";
            case NodeKind::neutral:   return "neutral";
            case NodeKind::top:       return "top(" + to_string(l.vertex) + ")";
        }
        return "unknown";
    }

    namespace
    {
        auto classify(const TreeDecomposition & td, const RootedTree & tree) -> vector<NodeLabel>
        {
            auto & bags = td.bags;
            auto fail = [] (int t, const string & why) {
                throw StructureError("node " + to_string(t) + " is not supernice: " + why);
            };

            vector<NodeLabel> labels(td.node_count());
            for (int t = 0 ; t < td.node_count() ; ++t) {
                auto & ch = tree.children[t];
                if (ch.empty()) {
                    if (! bags[t].empty())
                        fail(t, "leaf with nonempty bag " + bags[t].to_string());
                    labels[t] = NodeLabel{ NodeKind::initial, -1 };
                }
                else if (ch.size() == 1) {
                    VertexSet mine = bags[t], theirs = bags[ch[0]];
                    VertexSet added = mine - theirs, dropped = theirs - mine;
                    if (added.size() == 1 && dropped.empty())
                        labels[t] = NodeLabel{ NodeKind::introduce, added.first() };
                    else if (dropped.size() == 1 && added.empty())
                        labels[t] = NodeLabel{ NodeKind::forget, dropped.first() };
                    else if (added.empty() && dropped.empty()) {
                        labels[t] = NodeLabel{ NodeKind::neutral, -1 };
                        int p = tree.parent[t];
                        if (-1 != p && tree.children[p].size() == 1) {
                            VertexSet gone = mine - bags[p];
                            if (gone.size() == 1 && bags[p].subset_of(mine))
                                labels[t] = NodeLabel{ NodeKind::top, gone.first() };
                        }
                    }
                    else
                        fail(t, "bag " + mine.to_string() + " differs from its child's bag " + theirs.to_string() + " by more than one vertex");
                }
                else if (ch.size() == 2) {
                    if (bags[ch[0]] != bags[t] || bags[ch[1]] != bags[t])
                        fail(t, "two-child node whose children's bags differ from its own");
                    labels[t] = NodeLabel{ NodeKind::join, -1 };
                }
                else
                    fail(t, "node has " + to_string(ch.size()) + " children");
            }
            return labels;
        }
    }

    auto classify_nodes(const TreeDecomposition & rooted) -> vector<NodeLabel>
    {
        return classify(rooted, root_tree(rooted));
    }

    SuperniceDecomposition::SuperniceDecomposition(TreeDecomposition rooted, int ell) :
        _td(std::move(rooted)),
        _tree(root_tree(_td)),
        _labels(classify(_td, _tree)),
        _subtree(_td.node_count()),
        _ell(ell)
    {
        VertexSet all;
        for (int t : _tree.postorder) {
            _subtree[t] = _td.bags[t];
            for (int c : _tree.children[t])
                _subtree[t] |= _subtree[c];
            all |= _td.bags[t];
        }

        int capacity = all.empty() ? 0 : 64 - std::countl_zero(all.bits());
        _top.assign(capacity, -1);
        for (int t = 0 ; t < _td.node_count() ; ++t) {
            int p = _tree.parent[t];
            VertexSet leaving = (-1 == p) ? _td.bags[t] : (_td.bags[t] - _td.bags[p]);
            for (int v : leaving) {
                if (-1 != _top[v])
                    throw StructureError("vertex " + to_string(v) + " leaves the decomposition twice");
                _top[v] = t;
            }
        }
    }

    auto SuperniceDecomposition::top(int v) const -> int
    {
        return (v >= 0 && v < int(_top.size())) ? _top[v] : -1;
    }

    auto SuperniceDecomposition::topv(int t) const -> VertexSet
    {
        auto & l = _labels[t];
        if (l.kind == NodeKind::top)
            return VertexSet::singleton(l.vertex);
        int p = parent(t);
        return (-1 == p) ? bag(t) : (bag(t) - bag(p));
    }

    auto SuperniceDecomposition::is_ancestor_or_self(int a, int t) const -> bool
    {
        for ( ; t != -1 ; t = parent(t))
            if (t == a)
                return true;
        return false;
    }

    auto check_supernice(const SuperniceDecomposition & d, int ell) -> ValidationReport
    {
        ValidationReport report;
        if (! d.bag(d.root()).empty())
            report.add(ViolationKind::structure, "root bag " + d.bag(d.root()).to_string() + " is not empty", { d.root() });

        VertexSet all;
        for (int t = 0 ; t < d.node_count() ; ++t)
            all |= d.bag(t);
        for (int v : all) {
            int t = d.top(v);
            if (d.label(t) != NodeLabel{ NodeKind::top, v })
                report.add(ViolationKind::structure, "top node " + to_string(t) + " of vertex " + to_string(v) + " is labelled "
                        + node_label_name(d.label(t)), { t, v });
        }

        for (int t = 0 ; t < d.node_count() ; ++t) {
            auto kind = d.label(t).kind;
            if (kind != NodeKind::introduce && kind != NodeKind::forget && kind != NodeKind::join)
                continue;
            int a = t;
            for (int i = 0 ; i <= ell ; ++i) {
                a = d.parent(a);
                if (-1 == a) {
                    report.add(ViolationKind::structure, "node " + to_string(t) + " (" + node_label_name(d.label(t)) + ") has only "
                            + to_string(i) + " ancestors, needs " + to_string(ell + 1) + " neutral ones", { t });
                    break;
                }
                if (d.label(a).kind != NodeKind::neutral) {
                    report.add(ViolationKind::structure, "ancestor " + to_string(a) + " at distance " + to_string(i + 1) + " of node " + to_string(t)
                            + " is " + node_label_name(d.label(a)) + ", not neutral", { t, a });
                    break;
                }
            }
        }
        return report;
    }

    namespace
    {
        struct Workspace
        {
            vector<VertexSet> bags;
            vector<vector<int>> adj;

            auto add(VertexSet bag) -> int
            {
                bags.push_back(bag);
                adj.emplace_back();
                return int(bags.size()) - 1;
            }

            auto link(int s, int t) -> void
            {
                adj[s].push_back(t);
                adj[t].push_back(s);
            }

            auto relink(int s, int old_t, int new_t) -> void
            {
                std::replace(adj[s].begin(), adj[s].end(), old_t, new_t);
            }

            // puts a fresh node with the given bag on the edge s-t
            auto subdivide(int s, int t, VertexSet bag) -> int
            {
                int m = add(bag);
                relink(s, t, m);
                relink(t, s, m);
                adj[m] = { s, t };
                return m;
            }
        };
    }

    auto make_supernice(const Graph & g, const TreeDecomposition & t, int ell) -> SuperniceDecomposition
    {
        if (ell < 0)
            throw ContractError("ell must be nonnegative");
        auto report = validate(g, t);
        if (! report.ok())
            throw ContractError("make_supernice needs a valid decomposition:\n" + report.to_string());

        Workspace w;
        w.bags = t.bags;
        w.adj = t.adjacency();

        // surround every node of degree at least three by copies of itself
        int original = w.bags.size();
        for (int s = 0 ; s < original ; ++s)
            if (w.adj[s].size() >= 3) {
                auto around = w.adj[s];
                for (int u : around)
                    w.subdivide(s, u, w.bags[s]);
            }

        // split nodes of degree above three into a chain of degree-three nodes, separated by copies
        int before_binarise = w.bags.size();
        for (int s = 0 ; s < before_binarise ; ++s) {
            if (w.adj[s].size() <= 3)
                continue;
            auto around = w.adj[s];
            int d = around.size();
            int head = s;
            w.adj[s] = { around[0], around[1] };
            for (int i = 2 ; i < d - 2 ; ++i) {
                int copy = w.add(w.bags[s]), next = w.add(w.bags[s]);
                w.link(head, copy);
                w.link(copy, next);
                w.relink(around[i], s, next);
                w.adj[next].push_back(around[i]);
                head = next;
            }
            int copy = w.add(w.bags[s]), last = w.add(w.bags[s]);
            w.link(head, copy);
            w.link(copy, last);
            for (int i = d - 2 ; i < d ; ++i) {
                w.relink(around[i], s, last);
                w.adj[last].push_back(around[i]);
            }
        }

        // every node of degree at most one gets empty leaves until it has degree two
        int before_leaves = w.bags.size();
        for (int s = 0 ; s < before_leaves ; ++s)
            while (w.adj[s].size() < 2)
                w.link(s, w.add(VertexSet{}));

        // the root sits above the first empty leaf
        int leaf = -1;
        for (int s = 0 ; s < int(w.bags.size()) && -1 == leaf ; ++s)
            if (w.adj[s].size() == 1 && w.bags[s].empty())
                leaf = s;
        if (-1 == leaf)
            throw InternalError("no empty leaf after attaching leaves");
        int root = w.add(VertexSet{});
        w.link(leaf, root);

        // orient towards the root
        int count = w.bags.size();
        vector<int> parent(count, -2), order{ root };
        parent[root] = -1;
        for (unsigned i = 0 ; i < order.size() ; ++i)
            for (int u : w.adj[order[i]])
                if (parent[u] == -2) {
                    parent[u] = order[i];
                    order.push_back(u);
                }

        vector<VertexSet> bags = std::move(w.bags);
        auto add_node = [&] (VertexSet bag, int par) {
            bags.push_back(bag);
            parent.push_back(par);
            return int(bags.size()) - 1;
        };

        // between a child and its parent, first drop the child's extra vertices, then add the parent's,
        // each in ascending order
        for (int c = 0 ; c < count ; ++c) {
            int p = parent[c];
            if (-1 == p)
                continue;
            VertexSet current = bags[c];
            vector<VertexSet> steps;
            for (int v : bags[c] - bags[p]) {
                current.erase(v);
                steps.push_back(current);
            }
            for (int v : bags[p] - bags[c]) {
                current.insert(v);
                steps.push_back(current);
            }
            if (! steps.empty())
                steps.pop_back();
            int below = c;
            for (auto & s : steps) {
                int m = add_node(s, p);
                parent[below] = m;
                below = m;
            }
        }

        // every node with exactly one child (other than the root) becomes ell+3 identical nodes
        int total = bags.size();
        vector<int> child_count(total, 0);
        for (int s = 0 ; s < total ; ++s)
            if (parent[s] >= 0)
                ++child_count[parent[s]];
        for (int s = 0 ; s < total ; ++s) {
            if (s == root || child_count[s] != 1)
                continue;
            int below = s, above = parent[s];
            for (int i = 1 ; i < ell + 3 ; ++i) {
                int m = add_node(bags[s], above);
                parent[below] = m;
                below = m;
            }
        }

        TreeDecomposition result;
        result.bags = std::move(bags);
        result.root = root;
        for (int s = 0 ; s < int(parent.size()) ; ++s)
            if (parent[s] >= 0)
                result.add_edge(parent[s], s);
        return SuperniceDecomposition(std::move(result), ell);
    }
}
