#include <doctest.h>

#include <imtw/dp_engine.hh>
#include <imtw/errors.hh>
#include <imtw/graph_algorithms.hh>
#include <imtw/inner_decomposition.hh>
#include <imtw/pipeline.hh>
#include <imtw/random_instances.hh>

using namespace imtw;

namespace
{
    auto cycle(int n) -> Graph
    {
        Graph g(n);
        for (int i = 0 ; i < n ; ++i)
            g.add_edge(i, (i + 1) % n);
        return g;
    }

    auto clique(int n) -> Graph
    {
        Graph g(n);
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto solve(const Graph & g, const VertexWeights & weights, const std::string & preset,
            bool restrict_families = true) -> SolveReport
    {
        SolveOptions options;
        options.preset = preset;
        options.restrict_families = restrict_families;
        return solve_pipeline(g, weights, trivial_decomposition(g), options);
    }

    /// The inner automaton state at every host node, following the host's shape.
    auto inner_states(const Graph & g, const SuperniceDecomposition & host, const InnerDecomposition & inner,
            const Automaton & a) -> std::vector<State>
    {
        std::vector<State> states(host.node_count());
        for (int t : host.postorder()) {
            auto & kids = host.children(t);
            if (kids.empty())
                states[t] = a.leaf(g, inner.ibag[t]);
            else if (kids.size() == 1)
                states[t] = a.unary(g, states[kids[0]], inner.ibag[kids[0]], inner.ibag[t]);
            else
                states[t] = a.binary(g, states[kids[0]], states[kids[1]], inner.ibag[kids[0]], inner.ibag[kids[1]], inner.ibag[t]);
        }
        return states;
    }
}

TEST_CASE("dp examples")
{
    auto c5 = cycle(5);
    auto r = solve(c5, VertexWeights(5), "mwis");
    CHECK(r.status == SolveStatus::optimal);
    REQUIRE(r.solution);
    CHECK(r.solution->weight == Weight{ 2 });
    CHECK(r.solution->vertices == VertexSet{ 2, 4 });

    auto k4 = solve(clique(4), VertexWeights(4), "forest");
    REQUIRE(k4.solution);
    CHECK(k4.solution->weight == Weight{ 2 });

    auto negative = solve(clique(2), VertexWeights(std::vector<Weight>{ Weight{ -1 }, Weight{ -2 } }), "mwis");
    REQUIRE(negative.solution);
    CHECK(negative.solution->vertices.empty());
    CHECK(negative.solution->weight == Weight{ 0 });

    auto c6 = solve(cycle(6), VertexWeights(6), "cycle");
    REQUIRE(c6.solution);
    CHECK(c6.solution->vertices == VertexSet::range(6));

    CHECK(solve(Graph(0), VertexWeights(0), "tree").status == SolveStatus::infeasible);
    CHECK(solve(Graph(0), VertexWeights(0), "mwis").solution->vertices.empty());

    SolveOptions bounded;
    bounded.k = 0;
    CHECK(solve_pipeline(c5, VertexWeights(5), trivial_decomposition(c5), bounded).status == SolveStatus::mu_exceeded);

    SolveOptions low;
    low.preset = "cycle";
    low.w = 1;
    CHECK_THROWS_AS(solve_pipeline(c5, VertexWeights(5), trivial_decomposition(c5), low), ContractError);
}

TEST_CASE("dp agrees with the oracle and its tables pass the audit")
{
    Random rng(61);
    for (auto & preset : preset_names()) {
        for (int i = 0 ; i < 12 ; ++i) {
            auto g = random_graph(rng, uniform_int(rng, 0, 7), 0.2 * uniform_int(rng, 1, 3));
            auto weights = random_weights(rng, g.capacity(), -5, 5, 4);
            auto td = random_decomposition(rng, g);
            auto expected = brute_force_optimal(g, weights, problem_spec(preset));

            for (bool restrict_families : { true, false }) {
                SolveOptions options;
                options.preset = preset;
                options.restrict_families = restrict_families;
                auto r = solve_pipeline(g, weights, td, options);
                REQUIRE(r.solution.has_value() == expected.has_value());
                if (expected) {
                    CHECK(r.solution->weight == expected->weight);
                    CHECK(r.solution->vertices == expected->vertices);
                }
            }

            int w = preset_treewidth(preset);
            int ell = ell_bound(mu_width(g, td), w);
            auto host = make_supernice(g, td, ell);
            auto families = unrestricted_families(host);
            auto a = make_preset(preset, ell);
            DPOptions keep;
            keep.keep_tables = true;
            auto result = solve_dp(g, weights, host, families, *a, keep);
            CHECK(audit_tables(g, weights, host, families, result).ok());
            CHECK(result.statistics.top_condition_rejections == 0);
            CHECK(result.best.has_value() == expected.has_value());
        }
    }
}

TEST_CASE("tables hold the tuples of an inner decomposition")
{
    Random rng(62);
    for (int i = 0 ; i < 40 ; ++i) {
        auto preset = preset_names()[i % preset_names().size()];
        auto g = random_graph(rng, uniform_int(rng, 1, 7), 0.2 * uniform_int(rng, 1, 3));
        auto weights = random_weights(rng, g.capacity(), -5, 5, 4);
        auto td = random_decomposition(rng, g);
        auto expected = brute_force_optimal(g, weights, problem_spec(preset));
        if (! expected)
            continue;

        int w = preset_treewidth(preset);
        int ell = ell_bound(mu_width(g, td), w);
        auto host = make_supernice(g, td, ell);
        auto a = make_preset(preset, ell);
        auto per_bag = bag_families(g, weights, td, w, make_preset(preset), FamilyMode::bounded);
        auto families = propagate_families(host, td, per_bag);
        DPOptions keep;
        keep.keep_tables = true;
        auto result = solve_dp(g, weights, host, families, *a, keep);

        auto x = expected->vertices;
        auto [part, inner] = build_inner(g, host, x, w);
        auto states = inner_states(g, host, inner, *a);
        for (int t = 0 ; t < host.node_count() ; ++t) {
            int q = result.state_index(states[t]);
            REQUIRE(q >= 0);
            TupleKey key{ x & host.bag(t), inner.ibag[t] & part.x1, inner.ibag[t] & part.x2, q };
            auto found = result.tables[t].find(key);
            REQUIRE(found);
            CHECK(found->weight >= weights.total(x & host.subtree(t)));
        }
        REQUIRE(result.best);
        CHECK(result.best->weight == expected->weight);
    }
}

TEST_CASE("neutral fixpoint does not change results")
{
    Random rng(63);
    for (int i = 0 ; i < 20 ; ++i) {
        auto g = random_graph(rng, uniform_int(rng, 1, 7), 0.4);
        auto weights = random_weights(rng, g.capacity(), -5, 5, 4);
        auto td = random_decomposition(rng, g);
        int ell = ell_bound(mu_width(g, td), 1);
        auto host = make_supernice(g, td, ell);
        auto families = unrestricted_families(host);
        auto a = make_preset("tree", ell);
        DPOptions plain;
        plain.neutral_fixpoint = false;
        auto slow = solve_dp(g, weights, host, families, *a, plain);
        auto fast = solve_dp(g, weights, host, families, *a);
        CHECK(slow.best == fast.best);
        CHECK(fast.statistics.total_entries == slow.statistics.total_entries);
    }
}

TEST_CASE("family propagation")
{
    auto p3 = make_graph(3, { { 0, 1 }, { 1, 2 } });
    TreeDecomposition td;
    td.add_node(VertexSet{ 0, 1 });
    td.add_node(VertexSet{ 1, 2 });
    td.add_edge(0, 1);
    auto host = make_supernice(p3, td, 0);
    std::vector<Family> families{ { VertexSet{}, VertexSet{ 0 } }, { VertexSet{ 1 }, VertexSet{ 1, 2 } } };
    auto propagated = propagate_families(host, td, families);
    for (int t = 0 ; t < host.node_count() ; ++t) {
        auto & f = *propagated[t];
        if (host.bag(t) == VertexSet{ 1 })
            CHECK(f.empty());
        if (host.bag(t) == VertexSet{})
            CHECK(f == Family{ VertexSet{} });
        if (host.bag(t) == VertexSet{ 0, 1 })
            CHECK(f == families[0]);
    }
    CHECK_THROWS_AS(propagate_families(host, td, { families[0] }), ContractError);
}
