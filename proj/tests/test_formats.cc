#include <doctest.h>

#include <imtw/errors.hh>
#include <imtw/formats.hh>
#include <imtw/random_instances.hh>

#include <filesystem>

using namespace imtw;

namespace fs = std::filesystem;

namespace
{
    auto data(const std::string & sub) -> fs::path
    {
        return fs::path(IMTW_TEST_DATA_DIR) / sub;
    }

    auto sorted_edges(TreeDecomposition t) -> TreeDecomposition
    {
        for (auto & [a, b] : t.edges)
            if (a > b)
                std::swap(a, b);
        std::sort(t.edges.begin(), t.edges.end());
        return t;
    }
}

TEST_CASE("format examples")
{
    auto k2 = parse_gr("p tw 2 1\n1 2\n");
    CHECK(k2.order() == 2);
    CHECK(k2.edges() == std::vector<Edge>{ { 0, 1 } });

    auto p3 = parse_gr("p tw 3 2\n1 2\n2 3\n");
    auto t = parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n", 3);
    CHECK(validate(p3, t).ok());
    CHECK(t.root == -1);

    auto w = parse_weights("3 -7/2\n", 3);
    CHECK(w.weight(2) == Weight{ -7, 2 });
    CHECK(w.weight(0) == Weight{ 1 });
    CHECK(emit_weights(w) == "1 1\n2 1\n3 -7/2\n");
}

TEST_CASE("format errors name their line")
{
    int files = 0;
    for (auto & entry : fs::directory_iterator(data("invalid"))) {
        auto name = entry.path().stem().string();
        auto ext = entry.path().extension().string();
        int line = std::stoi(name.substr(name.rfind(".L") + 2));
        auto text = read_file(entry.path().string());
        CAPTURE(name);
        try {
            if (ext == ".gr")
                parse_gr(text);
            else if (ext == ".td")
                parse_td(text, 3);
            else
                parse_weights(text, 3);
            FAIL("parsed without error");
        }
        catch (const ParseError & e) {
            CHECK(e.line() == line);
        }
        ++files;
    }
    CHECK(files >= 15);
}

TEST_CASE("corpus round trips")
{
    int files = 0;
    for (auto & entry : fs::directory_iterator(data("corpus"))) {
        if (entry.path().extension() != ".gr")
            continue;
        auto base = entry.path();
        CAPTURE(base.string());
        auto text = read_file(base.string());
        auto g = parse_gr(text);
        CHECK(parse_gr(emit_gr(g)) == g);
        bool generated = base.stem().string().starts_with("gen");
        if (generated)
            CHECK(emit_gr(g) == text);
        ++files;

        auto td_path = base;
        td_path.replace_extension(".td");
        if (fs::exists(td_path)) {
            auto td_text = read_file(td_path.string());
            auto t = parse_td(td_text, g.capacity());
            CHECK(validate(g, t).ok());
            CHECK(parse_td(emit_td(t, g.capacity()), g.capacity()) == t);
            if (generated)
                CHECK(emit_td(t, g.capacity()) == td_text);
            ++files;
        }

        auto w_path = base;
        w_path.replace_extension(".w");
        if (fs::exists(w_path)) {
            auto w_text = read_file(w_path.string());
            auto w = parse_weights(w_text, g.capacity());
            CHECK(parse_weights(emit_weights(w), g.capacity()) == w);
            if (generated)
                CHECK(emit_weights(w) == w_text);
            ++files;
        }
    }
    CHECK(files >= 50);
}

TEST_CASE("random objects round trip")
{
    Random rng(71);
    for (int i = 0 ; i < 50 ; ++i) {
        auto g = random_graph(rng, uniform_int(rng, 0, 12), 0.4);
        CHECK(parse_gr(emit_gr(g)) == g);
        auto t = random_decomposition(rng, g);
        CHECK(parse_td(emit_td(t, g.capacity()), g.capacity()) == sorted_edges(t));
        auto w = random_weights(rng, g.capacity(), -5, 5, 4);
        CHECK(parse_weights(emit_weights(w), g.capacity()) == w);
    }
}
