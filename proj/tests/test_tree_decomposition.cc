#include <doctest.h>

#include <imtw/errors.hh>
#include <imtw/graph_algorithms.hh>
#include <imtw/random_instances.hh>
#include <imtw/supernice.hh>
#include <imtw/tree_decomposition.hh>

#include <map>

using namespace imtw;

namespace
{
    auto two_bag(VertexSet a, VertexSet b) -> TreeDecomposition
    {
        TreeDecomposition t;
        t.add_node(a);
        t.add_node(b);
        t.add_edge(0, 1);
        return t;
    }

    auto k33() -> Graph
    {
        Graph g(6);
        for (int u = 0 ; u < 3 ; ++u)
            for (int v = 3 ; v < 6 ; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto c5() -> Graph
    {
        return make_graph(5, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 0 } });
    }
}

TEST_CASE("validation reports witnesses")
{
    auto p3 = make_graph(3, { { 0, 1 }, { 1, 2 } });
    auto t = two_bag(VertexSet{ 0, 1 }, VertexSet{ 1, 2 });
    CHECK(validate(p3, t).ok());

    auto triangle = p3;
    triangle.add_edge(0, 2);
    auto report = validate(triangle, t);
    REQUIRE(report.count(ViolationKind::uncovered_edge) == 1);
    CHECK(report.violations[0].witness == std::vector<int>{ 0, 2 });

    TreeDecomposition split;
    split.add_node(VertexSet{ 0 });
    split.add_node(VertexSet{ 1 });
    split.add_node(VertexSet{ 0 });
    split.add_edge(0, 1);
    split.add_edge(1, 2);
    auto r2 = validate(Graph(2), split);
    REQUIRE(r2.count(ViolationKind::disconnected_vertex) == 1);
    CHECK(r2.violations[0].witness == std::vector<int>{ 0 });

    auto r3 = validate(Graph(3), two_bag(VertexSet{ 0 }, VertexSet{ 1 }));
    REQUIRE(r3.count(ViolationKind::missing_vertex) == 1);
    CHECK(r3.violations[0].witness == std::vector<int>{ 2 });

    TreeDecomposition cyclic = two_bag(VertexSet{ 0 }, VertexSet{ 0 });
    cyclic.add_edge(1, 0);
    CHECK(validate(Graph(1), cyclic).count(ViolationKind::not_a_tree) == 1);
}

TEST_CASE("width")
{
    Graph k4(4);
    for (int u = 0 ; u < 4 ; ++u)
        for (int v = u + 1 ; v < 4 ; ++v)
            k4.add_edge(u, v);
    CHECK(width(trivial_decomposition(k4)) == 3);
    CHECK(width(two_bag(VertexSet{ 0, 1 }, VertexSet{ 1, 2 })) == 1);
    CHECK(width(two_bag(VertexSet{}, VertexSet{})) == -1);
    CHECK_THROWS_AS(width(TreeDecomposition{}), StructureError);
}

TEST_CASE("mu-width")
{
    CHECK(mu_width(c5(), trivial_decomposition(c5())) == 1);
    auto two_k2 = make_graph(4, { { 0, 1 }, { 2, 3 } });
    CHECK(mu_width(two_k2, trivial_decomposition(two_k2)) == 2);
    CHECK(mu_width(k33(), trivial_decomposition(k33())) == 1);
}

TEST_CASE("decompositions from orderings and searches are valid")
{
    Random rng(21);
    for (int i = 0 ; i < 60 ; ++i) {
        auto g = random_graph(rng, uniform_int(rng, 0, 8), 0.4);
        auto opt = optimal_width_decomposition(g);
        CHECK(validate(g, opt).ok());
        CHECK(width(opt) == treewidth_exact(g));

        auto search = mu_width_search_decomposition(g);
        CHECK(validate(g, search).ok());
        CHECK(mu_width(g, search) <= mu_width(g, trivial_decomposition(g)));
        CHECK(mu_width(g, search) <= mu_width(g, opt));

        auto rnd = random_decomposition(rng, g);
        CHECK(validate(g, rnd).ok());
        auto bin = random_binary_decomposition(rng, g);
        CHECK(validate(g, bin).ok());
        auto tree = root_tree(bin);
        for (auto & c : tree.children)
            CHECK(c.size() <= 2);
    }

    auto p4 = make_graph(4, { { 0, 1 }, { 1, 2 }, { 2, 3 } });
    CHECK(mu_width(p4, mu_width_search_decomposition(p4)) == 1);
}

TEST_CASE("classification")
{
    TreeDecomposition t;
    t.add_node(VertexSet{});        // 0 root
    t.add_node(VertexSet{ 0 });     // 1 forget 0 above
    t.add_node(VertexSet{ 0 });     // 2 top(0)
    t.add_node(VertexSet{ 0, 1 });  // 3
    t.add_node(VertexSet{ 0 });     // 4
    t.add_node(VertexSet{});        // 5 leaf
    t.root = 0;
    t.add_edge(0, 1);
    t.add_edge(1, 2);
    t.add_edge(2, 3);
    t.add_edge(3, 4);
    t.add_edge(4, 5);
    auto labels = classify_nodes(t);
    CHECK(labels[0] == NodeLabel{ NodeKind::forget, 0 });
    CHECK(labels[1] == NodeLabel{ NodeKind::top, 0 });
    CHECK(labels[2] == NodeLabel{ NodeKind::forget, 1 });
    CHECK(labels[3] == NodeLabel{ NodeKind::introduce, 1 });
    CHECK(labels[4] == NodeLabel{ NodeKind::introduce, 0 });
    CHECK(labels[5] == NodeLabel{ NodeKind::initial, -1 });

    TreeDecomposition bad = t;
    bad.bags[5] = VertexSet{ 3 };
    CHECK_THROWS_AS(classify_nodes(bad), StructureError);
}

TEST_CASE("supernice examples")
{
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(0, 2);
    k3.add_edge(1, 2);
    auto d = make_supernice(k3, trivial_decomposition(k3), 2);
    CHECK(validate(k3, d.decomposition()).ok());
    CHECK(check_supernice(d, 2).ok());
    bool seen_full = false;
    for (int t = 0 ; t < d.node_count() ; ++t) {
        CHECK(d.bag(t).subset_of(VertexSet{ 0, 1, 2 }));
        seen_full = seen_full || d.bag(t) == VertexSet{ 0, 1, 2 };
    }
    CHECK(seen_full);

    Graph empty(0);
    auto e = make_supernice(empty, trivial_decomposition(empty), 3);
    CHECK(validate(empty, e.decomposition()).ok());
    CHECK(check_supernice(e, 3).ok());
    for (int t = 0 ; t < e.node_count() ; ++t)
        CHECK(e.bag(t).empty());

    auto p3 = make_graph(3, { { 0, 1 }, { 1, 2 } });
    auto p = make_supernice(p3, two_bag(VertexSet{ 0, 1 }, VertexSet{ 1, 2 }), 1);
    std::map<int, int> tops;
    for (auto & l : p.labels())
        if (l.kind == NodeKind::top)
            ++tops[l.vertex];
    CHECK(tops == std::map<int, int>{ { 0, 1 }, { 1, 1 }, { 2, 1 } });

    CHECK_THROWS_AS(make_supernice(k3, two_bag(VertexSet{ 0, 1 }, VertexSet{ 1, 2 }), 1), ContractError);
}

TEST_CASE("supernice on random decompositions")
{
    Random rng(22);
    for (int i = 0 ; i < 40 ; ++i) {
        auto g = random_graph(rng, uniform_int(rng, 0, 8), 0.4);
        auto t = random_decomposition(rng, g);
        for (int ell : { 0, 1, 2, 5 }) {
            auto d = make_supernice(g, t, ell);
            CHECK(validate(g, d.decomposition()).ok());
            CHECK(check_supernice(d, ell).ok());
            for (int s = 0 ; s < d.node_count() ; ++s) {
                bool inside = false;
                for (auto & b : t.bags)
                    inside = inside || d.bag(s).subset_of(b);
                CHECK(inside);
            }
            for (auto & b : t.bags) {
                bool found = false;
                for (int s = 0 ; s < d.node_count() ; ++s)
                    found = found || d.bag(s) == b;
                CHECK(found);
            }
            long long size = t.node_count() + g.order() + ell;
            CHECK(d.node_count() <= supernice_size_constant * size * size * size);
            CHECK(mu_width(g, d.decomposition()) <= mu_width(g, t));

            for (int s = 0 ; s < d.node_count() ; ++s)
                for (int v : d.bag(s))
                    CHECK(d.is_ancestor_or_self(d.top(v), s));
        }
    }
}
