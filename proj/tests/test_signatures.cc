#include <doctest.h>

#include <imtw/errors.hh>
#include <imtw/graph_algorithms.hh>
#include <imtw/oracle.hh>
#include <imtw/random_instances.hh>
#include <imtw/signatures.hh>

#include <algorithm>

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

    auto contains(const std::vector<VertexSet> & family, VertexSet x) -> bool
    {
        return std::find(family.begin(), family.end(), x) != family.end();
    }
}

TEST_CASE("maximal independent set projections")
{
    auto p3 = make_graph(3, { { 0, 1 }, { 1, 2 } });
    CHECK(mis_projections(p3, VertexSet{ 1 }) == std::vector<VertexSet>{ VertexSet{}, VertexSet{ 1 } });
    CHECK(mis_projections(cycle(4), VertexSet::range(4)) == std::vector<VertexSet>{ VertexSet{ 0, 2 }, VertexSet{ 1, 3 } });
    CHECK(mis_projections(p3, VertexSet{}) == std::vector<VertexSet>{ VertexSet{} });
}

TEST_CASE("dangling vertices")
{
    Graph g(4);
    g.add_edge(1, 2);
    CHECK(dangling_vertices(BasicSignature{ VertexSet{ 0 }, VertexSet{ 2, 3 }, VertexSet{ 1 }, VertexSet::range(4) }, g) == VertexSet{ 3 });
    CHECK(dangling_vertices(BasicSignature{ VertexSet{}, VertexSet{ 2, 3 }, VertexSet{}, VertexSet::range(4) }, g) == VertexSet{ 2, 3 });
    CHECK(dangling_vertices(BasicSignature{ VertexSet{}, VertexSet{ 2 }, VertexSet{ 1 }, VertexSet::range(4) }, g).empty());
}

TEST_CASE("classifying dangling vertices")
{
    Graph isolated(4);
    auto a = make_preset("mwis");
    CHECK(classify_dangling(isolated, VertexWeights(4), VertexSet{ 0, 1, 2 }, VertexSet{}, a.get()).size() == 1);

    VertexWeights signs(std::vector<Weight>{ Weight{ -1 }, Weight{ 2 } });
    CHECK(classify_dangling(Graph(2), signs, VertexSet{ 0, 1 }, VertexSet{}, a.get()).size() == 2);
    CHECK(classify_dangling(Graph(2), signs, VertexSet{ 0, 1 }, VertexSet{}, nullptr).size() == 1);

    auto g = make_graph(4, { { 0, 2 }, { 1, 3 } });
    CHECK(classify_dangling(g, VertexWeights(4), VertexSet{ 0, 1 }, VertexSet{ 2, 3 }, a.get()).size() == 2);

    VertexWeights w(std::vector<Weight>{ Weight{ 3 }, Weight{ 1 }, Weight{ 1 } });
    auto groups = classify_dangling(Graph(3), w, VertexSet{ 0, 1, 2 }, VertexSet{}, nullptr);
    REQUIRE(groups.size() == 1);
    CHECK(groups[0] == std::vector<int>{ 1, 2, 0 });
}

TEST_CASE("suffix families")
{
    CHECK(suffix_family({ 0, 1, 2, 3 }, 1, 0, FamilyMode::bounded) ==
            std::vector<VertexSet>{ VertexSet{}, VertexSet{ 3 }, VertexSet{ 1, 2, 3 }, VertexSet{ 0, 1, 2, 3 } });
    CHECK(suffix_family({ 5 }, 0, 0, FamilyMode::bounded) == std::vector<VertexSet>{ VertexSet{}, VertexSet{ 5 } });
    CHECK(suffix_family({ 5 }, 7, 3, FamilyMode::all) == std::vector<VertexSet>{ VertexSet{}, VertexSet{ 5 } });
    CHECK(suffix_family({ 0, 1, 2 }, 0, 0, FamilyMode::all).size() == 4);
}

TEST_CASE("bag family examples")
{
    auto c5 = cycle(5);
    auto mwis = make_preset("mwis");
    CHECK(contains(enumerate_bag_family(c5, VertexWeights(5), VertexSet::range(5), 1, 0, mwis, FamilyMode::bounded), VertexSet{ 2, 4 }));

    auto k2 = make_graph(2, { { 0, 1 } });
    VertexWeights negative(std::vector<Weight>{ Weight{ -1 }, Weight{ -2 } });
    CHECK(contains(enumerate_bag_family(k2, negative, VertexSet::range(2), 1, 0, mwis, FamilyMode::bounded), VertexSet{}));

    auto c4 = cycle(4);
    auto family = enumerate_bag_family(c4, VertexWeights(4), VertexSet::range(4), 2, 1, make_preset("forest"), FamilyMode::all);
    CHECK(contains(family, VertexSet{ 1, 2, 3 }));
    CHECK(! contains(family, VertexSet::range(4)));
}

TEST_CASE("signature examples")
{
    auto c5 = cycle(5);
    auto sig = construct_signature_for(c5, VertexSet{ 2, 4 }, VertexSet::range(5), 1, 0);
    CHECK(sig.c.empty());
    CHECK(sig.s == VertexSet{ 2, 4 });
    CHECK(sig.d.empty());
    CHECK(signature_violation(c5, VertexSet{ 2, 4 }, sig) == "");

    auto empty = construct_signature_for(c5, VertexSet{}, VertexSet{ 0, 1, 2 }, 1, 0);
    CHECK(empty.c.empty());
    CHECK(empty.d.empty());
    CHECK(signature_violation(c5, VertexSet{}, empty) == "");

    auto bad = sig;
    bad.s = VertexSet{ 2 };
    CHECK(signature_violation(c5, VertexSet{ 2, 4 }, bad) != "");
}

TEST_CASE("signature properties for optimal solutions")
{
    Random rng(51);
    int checked = 0;
    for (int i = 0 ; i < 60 ; ++i) {
        auto g = random_graph(rng, uniform_int(rng, 1, 8), std::vector<double>{ 0.2, 0.4, 0.6 }[i % 3]);
        auto weights = random_weights(rng, g.capacity());
        auto preset = preset_names()[i % 5];
        auto spec = problem_spec(preset);
        auto best = brute_force_optimal(g, weights, spec);
        if (! best)
            continue;
        VertexSet x = best->vertices;
        auto a = make_preset(preset);
        auto t = random_decomposition(rng, g);

        for (auto & b : t.bags) {
            int k = mu_of_set(g, b);
            auto sig = construct_signature_for(g, x, b, k, spec.w);
            REQUIRE(signature_violation(g, x, sig) == "");
            CHECK((sig.c & b).subset_of(x & b));
            CHECK((x & b).subset_of(sig.s | (sig.c & b)));
            CHECK(! ((sig.s - sig.c) & g.neighbourhood(sig.d)).intersects(x));

            VertexSet u = dangling_vertices(sig, g);
            for (int v : u)
                CHECK((g.neighbours(v) & x).subset_of(sig.c));

            for (auto & group : classify_dangling(g, weights, u, sig.c, a.get())) {
                int inside = 0;
                for (unsigned j = 0 ; j < group.size() ; ++j)
                    if (x.contains(group[j]))
                        ++inside;
                for (unsigned j = 0 ; j < group.size() ; ++j)
                    CHECK(x.contains(group[j]) == (j + inside >= group.size()));

                State q = a->unary(g, a->leaf(g, x - u), x - u, sig.c);
                long long r = orbit_size(*a, g, q, sig.c, group[0]);
                long long outside = group.size() - inside;
                CHECK((inside <= std::max<long long>(spec.w + 1, r) || outside <= r));
            }
            ++checked;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("bag families contain the optimal trace")
{
    Random rng(52);
    for (int i = 0 ; i < 40 ; ++i) {
        auto g = random_graph(rng, uniform_int(rng, 1, 8), std::vector<double>{ 0.2, 0.4, 0.6 }[i % 3]);
        auto weights = random_weights(rng, g.capacity());
        auto preset = preset_names()[i % 5];
        auto spec = problem_spec(preset);
        auto best = brute_force_optimal(g, weights, spec);
        if (! best)
            continue;
        auto t = random_decomposition(rng, g);
        for (auto mode : { FamilyMode::bounded, FamilyMode::all }) {
            FamilyOptions options;
            options.mode = mode;
            FamilyEnumerator enumerator(g, weights, spec.w, make_preset(preset), options);
            for (auto & b : t.bags) {
                auto family = enumerator.family(b, mu_of_set(g, b));
                CHECK(contains(family, best->vertices & b));
                for (auto & y : family)
                    CHECK(y.subset_of(b));
            }
        }
    }
}

TEST_CASE("modes")
{
    CHECK(parse_family_mode("all") == FamilyMode::all);
    CHECK_THROWS_AS(parse_family_mode("some"), ContractError);
    FamilyEnumerator forest(Graph(2), VertexWeights(2), 1, make_preset("forest"));
    CHECK(forest.mode() == FamilyMode::all);
    FamilyEnumerator mwis(Graph(2), VertexWeights(2), 0, make_preset("mwis"));
    CHECK(mwis.mode() == FamilyMode::bounded);
}
