/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <imtw/errors.hh>
#include <imtw/graph_algorithms.hh>
#include <imtw/inner_decomposition.hh>

using std::pair;
using std::string;
using std::to_string;
using std::vector;

namespace imtw
{
    auto ell_bound(int k, int w) -> int
    {
        if (k < 0 || w < 0)
            throw ContractError("ell_bound needs k, w >= 0");
        return k * (w + 1) * (5 * w + 6);
    }

    auto component_bounds(int k, int w) -> ComponentSizes
    {
        return ComponentSizes{ k * (w + 1) * (w + 1), k * (w + 1) * (2 * w + 3), 2 * k * (w + 1) * (w + 1) };
    }

    auto partition_solution(const Graph & g, VertexSet x, int w) -> SolutionPartition
    {
        SolutionPartition p;
        for (int v : x)
            if ((g.neighbours(v) & x).size() > 2 * (w + 1))
                p.heavy.insert(v);
        p.light = x - p.heavy;
        for (int v : p.light)
            if (g.neighbours(v).intersects(p.light))
                p.light_linked.insert(v);
        p.x1 = p.heavy | p.light_linked;
        p.x2 = p.light - p.light_linked;
        return p;
    }

    auto InnerDecomposition::width() const -> int
    {
        int result = -1;
        for (auto & b : ibag)
            result = std::max(result, b.size() - 1);
        return result;
    }

    auto InnerDecomposition::as_decomposition(const SuperniceDecomposition & host) const -> TreeDecomposition
    {
        TreeDecomposition t = host.decomposition();
        t.bags = ibag;
        return t;
    }

    auto out_heavy(const Graph & g, const SuperniceDecomposition & host, const SolutionPartition & part, int t) -> VertexSet
    {
        VertexSet result;
        VertexSet light_here = host.bag(t) & part.light;
        for (int u : part.heavy & host.subtree(t))
            if (g.neighbours(u).intersects(light_here))
                result.insert(u);
        return result;
    }

    auto component_sizes(const Graph & g, const SuperniceDecomposition & host, const SolutionPartition & part, int t) -> ComponentSizes
    {
        return ComponentSizes{ (host.bag(t) & part.heavy).size(), (host.bag(t) & part.light_linked).size(),
            out_heavy(g, host, part, t).size() };
    }

    auto build_inner(const Graph & g, const SuperniceDecomposition & host, VertexSet x, int w,
            const Guards & guards) -> pair<SolutionPartition, InnerDecomposition>
    {
        if (! treewidth_at_most(g, x, w, guards))
            throw ContractError("G[X] has treewidth above " + to_string(w));

        auto part = partition_solution(g, x, w);
        int ell = host.ell();
        InnerDecomposition inner;
        inner.ell = ell;
        inner.unsmoothed.resize(host.node_count());
        for (int t = 0 ; t < host.node_count() ; ++t)
            inner.unsmoothed[t] = (host.bag(t) & part.x1) | out_heavy(g, host, part, t) | (host.topv(t) & part.x2);
        inner.ibag = inner.unsmoothed;

        // forget the excess of each forget node one vertex per neutral ancestor
        auto & before = inner.unsmoothed;
        for (int t = 0 ; t < host.node_count() ; ++t) {
            auto & label = host.label(t);
            if (label.kind != NodeKind::forget)
                continue;
            int v = label.vertex, c = host.children(t).at(0);
            VertexSet extra = before[c] - before[t];
            auto order = extra.without(v).to_vector();
            bool v_low = part.x2.contains(v);
            inner.ibag[t] = v_low ? before[c].without(v) : before[c];

            VertexSet current = inner.ibag[t];
            int a = t;
            for (int i = 1 ; i <= ell + 1 ; ++i) {
                a = host.parent(a);
                if (-1 == a || host.label(a).kind != NodeKind::neutral)
                    throw ContractError("host is not " + to_string(ell) + "-supernice above node " + to_string(t));
                if (i <= int(order.size()))
                    current.erase(order[i - 1]);
                else
                    current = before[t];
                inner.ibag[a] = current;
            }
            if (current != before[t])
                throw InternalError("node " + to_string(t) + " forgets more vertices than its neutral ancestors can absorb");
        }

        auto report = verify_inner(g, host, part, inner, ell);
        if (! report.ok())
            throw InternalError("inner decomposition fails verification: " + report.to_string());
        return { part, inner };
    }

    auto verify_inner(const Graph & g, const SuperniceDecomposition & host, const SolutionPartition & part,
            const InnerDecomposition & inner, int ell) -> ValidationReport
    {
        ValidationReport report;
        auto fail = [&] (const string & what, vector<int> witness) {
            report.add(ViolationKind::structure, what, std::move(witness));
        };

        if (int(inner.ibag.size()) != host.node_count()) {
            fail("inner decomposition has " + to_string(inner.ibag.size()) + " bags for " + to_string(host.node_count()) + " nodes", {});
            return report;
        }

        VertexSet x = part.x1 | part.x2;
        if (part.x1.intersects(part.x2))
            fail("X1 and X2 overlap in " + (part.x1 & part.x2).to_string(), (part.x1 & part.x2).to_vector());
        if (! is_independent_set(g, part.x2))
            fail("X2 is not independent", part.x2.to_vector());
        if (! (part.heavy | part.light).empty()) {
            if ((part.heavy | part.light) != x || part.heavy.intersects(part.light))
                fail("heavy and light vertices do not split X", {});
            if (part.x1 != (part.heavy | part.light_linked) || part.x2 != (part.light - part.light_linked))
                fail("X1, X2 do not follow the heavy/light split", {});
            for (int v : part.light)
                if (g.neighbours(v).intersects(part.light) != part.light_linked.contains(v))
                    fail("vertex " + to_string(v) + " is misfiled in the light-linked set", { v });
        }

        // item 1
        auto td = inner.as_decomposition(host);
        auto inner_report = validate(induced_subgraph(g, x), td);
        report.append(inner_report);
        if (inner.width() > ell)
            fail("width " + to_string(inner.width()) + " exceeds " + to_string(ell), {});

        for (int t = 0 ; t < host.node_count() ; ++t) {
            VertexSet ib = inner.ibag[t], b = host.bag(t);
            VertexSet ib1 = ib & part.x1;
            // item 2
            if (! (b & part.x1).subset_of(ib1) || ! ib1.subset_of(host.subtree(t) & part.x1))
                fail("node " + to_string(t) + ": X1 part of " + ib.to_string() + " is not between bag and subtree", { t });
            // item 3
            for (int v : ib & part.x2)
                if (host.top(v) != t)
                    fail("node " + to_string(t) + ": X2 vertex " + to_string(v) + " away from its top node", { t, v });
            // neighbours of X2 vertices in the bag are kept
            VertexSet needed = g.neighbourhood(part.x2 & b) & part.x1 & host.subtree(t);
            if (! needed.subset_of(ib))
                fail("node " + to_string(t) + ": misses X1 neighbours " + (needed - ib).to_string() + " of bag X2 vertices", { t });

            // item 4
            auto & label = host.label(t);
            auto & ch = host.children(t);
            int v = label.vertex;
            auto shape = [&] (bool ok, const string & rule) {
                if (! ok)
                    fail("node " + to_string(t) + " (" + node_label_name(label) + "): " + rule, { t });
            };
            switch (label.kind) {
                case NodeKind::initial:
                    break;
                case NodeKind::introduce: {
                    VertexSet c = inner.ibag[ch[0]];
                    shape(ib == c || ib == c.with(v), "must add nothing or its vertex");
                    break;
                }
                case NodeKind::forget: {
                    VertexSet c = inner.ibag[ch[0]];
                    shape((ib == c && ! part.x2.contains(v)) || (ib == c.without(v) && part.x2.contains(v) && c.contains(v)),
                            "must drop its vertex exactly when it is in X2");
                    break;
                }
                case NodeKind::join: {
                    VertexSet c1 = inner.ibag[ch[0]], c2 = inner.ibag[ch[1]];
                    shape(ib == (c1 | c2) && (c1 & c2) == (ib & b), "children must merge and meet inside the bag");
                    break;
                }
                case NodeKind::neutral: {
                    VertexSet c = inner.ibag[ch[0]];
                    VertexSet dropped = c - ib;
                    shape(ib.subset_of(c) && dropped.size() <= 1 && dropped.subset_of(part.x1), "may drop at most one X1 vertex");
                    break;
                }
                case NodeKind::top: {
                    VertexSet c = inner.ibag[ch[0]];
                    shape((ib == c && ! part.x2.contains(v)) || (ib == c.with(v) && part.x2.contains(v) && ! c.contains(v)),
                            "must add its vertex exactly when it is in X2");
                    break;
                }
            }
            if (t == host.root())
                shape(ib.empty(), "root bag must be empty");
        }
        return report;
    }
}
