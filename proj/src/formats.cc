/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <imtw/errors.hh>
#include <imtw/formats.hh>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

using std::istream;
using std::istringstream;
using std::ostringstream;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace imtw
{
    namespace
    {
        struct Line
        {
            int number;
            vector<string> tokens;
        };

        /// Meaningful lines, split on whitespace.
        auto read_lines(istream & in) -> vector<Line>
        {
            vector<Line> result;
            string text;
            int number = 0;
            while (std::getline(in, text)) {
                ++number;
                istringstream words(text);
                vector<string> tokens;
                string word;
                while (words >> word)
                    tokens.push_back(word);
                if (tokens.empty() || tokens[0] == "c")
                    continue;
                result.push_back(Line{ number, std::move(tokens) });
            }
            return result;
        }

        auto parse_int(const Line & line, const string & token, const string & what) -> long long
        {
            long long value = 0;
            auto [end, error] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (error != std::errc{} || end != token.data() + token.size())
                throw ParseError(line.number, "expected an integer for " + what + ", got '" + token + "'");
            return value;
        }

        auto parse_index(const Line & line, const string & token, long long limit, const string & what) -> int
        {
            auto value = parse_int(line, token, what);
            if (value < 1 || value > limit)
                throw ParseError(line.number, what + " " + token + " is outside 1.." + to_string(limit));
            return int(value - 1);
        }

        auto expect_tokens(const Line & line, unsigned count, const string & what) -> void
        {
            if (line.tokens.size() != count)
                throw ParseError(line.number, "expected " + what);
        }

        auto end_of_input(const vector<Line> & lines) -> int
        {
            return lines.empty() ? 1 : lines.back().number + 1;
        }

        auto check_order(const Line & line, long long n) -> int
        {
            if (n < 0 || n > VertexSet::capacity)
                throw ParseError(line.number, "vertex count " + to_string(n) + " is outside 0.." + to_string(VertexSet::capacity));
            return int(n);
        }
    }

    auto parse_gr(istream & in) -> Graph
    {
        auto lines = read_lines(in);
        if (lines.empty())
            throw ParseError(1, "missing 'p tw' header");

        auto & header = lines[0];
        if (header.tokens.size() != 4 || header.tokens[0] != "p" || header.tokens[1] != "tw")
            throw ParseError(header.number, "expected 'p tw <n> <m>'");
        int n = check_order(header, parse_int(header, header.tokens[2], "vertex count"));
        auto m = parse_int(header, header.tokens[3], "edge count");
        if (m < 0)
            throw ParseError(header.number, "negative edge count");

        Graph g(n);
        if (lines.size() - 1 != std::size_t(m))
            throw ParseError(lines.size() - 1 < std::size_t(m) ? end_of_input(lines) : lines[m + 1].number,
                    "expected " + to_string(m) + " edges, found " + to_string(lines.size() - 1));
        for (unsigned i = 1 ; i < lines.size() ; ++i) {
            auto & line = lines[i];
            expect_tokens(line, 2, "'<u> <v>'");
            int u = parse_index(line, line.tokens[0], n, "vertex");
            int v = parse_index(line, line.tokens[1], n, "vertex");
            if (u == v)
                throw ParseError(line.number, "self-loop at " + line.tokens[0]);
            if (! g.add_edge(u, v))
                throw ParseError(line.number, "repeated edge " + line.tokens[0] + " " + line.tokens[1]);
        }
        return g;
    }

    auto parse_gr(const string & text) -> Graph
    {
        istringstream in(text);
        return parse_gr(in);
    }

    auto emit_gr(const Graph & g) -> string
    {
        ostringstream out;
        auto edges = g.edges();
        out << "p tw " << g.capacity() << " " << edges.size() << "\n";
        for (auto & e : edges)
            out << e.u + 1 << " " << e.v + 1 << "\n";
        return out.str();
    }

    auto parse_td(istream & in, int n) -> TreeDecomposition
    {
        auto lines = read_lines(in);
        if (lines.empty())
            throw ParseError(1, "missing 's td' header");

        auto & header = lines[0];
        if (header.tokens.size() != 5 || header.tokens[0] != "s" || header.tokens[1] != "td")
            throw ParseError(header.number, "expected 's td <N> <maxbagsize> <n>'");
        auto count = parse_int(header, header.tokens[2], "bag count");
        auto declared_max = parse_int(header, header.tokens[3], "maximum bag size");
        auto order = parse_int(header, header.tokens[4], "vertex count");
        if (order != n)
            throw ParseError(header.number, "decomposition is for " + to_string(order) + " vertices, graph has " + to_string(n));
        if (count < 1 || count > 1000000)
            throw ParseError(header.number, "bag count " + to_string(count) + " is out of range");
        if (lines.size() != std::size_t(2 * count))
            throw ParseError(lines.size() < std::size_t(2 * count) ? end_of_input(lines) : lines[2 * count].number,
                    "expected " + to_string(count) + " bags and " + to_string(count - 1) + " edges");

        TreeDecomposition t;
        t.bags.assign(count, VertexSet{});
        vector<char> seen(count, 0);
        int actual_max = 0;
        for (long long i = 1 ; i <= count ; ++i) {
            auto & line = lines[i];
            if (line.tokens.size() < 2 || line.tokens[0] != "b")
                throw ParseError(line.number, "expected 'b <i> <v...>'");
            int id = parse_index(line, line.tokens[1], count, "bag id");
            if (seen[id])
                throw ParseError(line.number, "duplicate bag id " + line.tokens[1]);
            seen[id] = 1;
            for (unsigned j = 2 ; j < line.tokens.size() ; ++j) {
                int v = parse_index(line, line.tokens[j], n, "vertex");
                if (t.bags[id].contains(v))
                    throw ParseError(line.number, "vertex " + line.tokens[j] + " repeated in bag");
                t.bags[id].insert(v);
            }
            actual_max = std::max(actual_max, t.bags[id].size());
        }

        // union-find over bag ids to reject cycles and repeated edges
        vector<int> parent(count);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&] (int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (long long i = count + 1 ; i < 2 * count ; ++i) {
            auto & line = lines[i];
            expect_tokens(line, 2, "'<i> <j>'");
            int a = parse_index(line, line.tokens[0], count, "bag id");
            int b = parse_index(line, line.tokens[1], count, "bag id");
            int ra = find(a), rb = find(b);
            if (ra == rb)
                throw ParseError(line.number, "edge " + line.tokens[0] + " " + line.tokens[1] + " does not keep the bags a tree");
            parent[ra] = rb;
            t.add_edge(std::min(a, b), std::max(a, b));
        }
        std::sort(t.edges.begin(), t.edges.end());

        if (declared_max != actual_max)
            throw ParseError(header.number, "declared maximum bag size " + to_string(declared_max)
                    + " but the largest bag has " + to_string(actual_max));
        return t;
    }

    auto parse_td(const string & text, int n) -> TreeDecomposition
    {
        istringstream in(text);
        return parse_td(in, n);
    }

    auto emit_td(const TreeDecomposition & t, int n) -> string
    {
        ostringstream out;
        int largest = 0;
        for (auto & b : t.bags)
            largest = std::max(largest, b.size());
        out << "s td " << t.node_count() << " " << largest << " " << n << "\n";
        for (int i = 0 ; i < t.node_count() ; ++i) {
            out << "b " << i + 1;
            for (int v : t.bags[i])
                out << " " << v + 1;
            out << "\n";
        }
        vector<std::pair<int, int>> edges;
        for (auto [a, b] : t.edges)
            edges.emplace_back(std::min(a, b), std::max(a, b));
        std::sort(edges.begin(), edges.end());
        for (auto [a, b] : edges)
            out << a + 1 << " " << b + 1 << "\n";
        return out.str();
    }

    auto parse_weights(istream & in, int n) -> VertexWeights
    {
        VertexWeights result(n);
        vector<char> seen(n, 0);
        for (auto & line : read_lines(in)) {
            expect_tokens(line, 2, "'<v> <p>[/<q>]'");
            int v = parse_index(line, line.tokens[0], n, "vertex");
            if (seen[v])
                throw ParseError(line.number, "vertex " + line.tokens[0] + " weighted twice");
            seen[v] = 1;
            try {
                result.set_weight(v, parse_weight(line.tokens[1]));
            }
            catch (const std::exception &) {
                throw ParseError(line.number, "bad weight '" + line.tokens[1] + "'");
            }
        }
        return result;
    }

    auto parse_weights(const string & text, int n) -> VertexWeights
    {
        istringstream in(text);
        return parse_weights(in, n);
    }

    auto emit_weights(const VertexWeights & w) -> string
    {
        ostringstream out;
        for (int v = 0 ; v < w.size() ; ++v)
            out << v + 1 << " " << weight_to_string(w.weight(v)) << "\n";
        return out.str();
    }

    auto read_file(const string & path) -> string
    {
        std::ifstream in(path);
        if (! in)
            throw ContractError("cannot open '" + path + "'");
        ostringstream out;
        out << in.rdbuf();
        return out.str();
    }
}
