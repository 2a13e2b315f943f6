/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <imtw/automata.hh>
#include <imtw/errors.hh>

#include <algorithm>
#include <array>
#include <sstream>

using std::make_shared;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace imtw
{
    auto StateHash::operator() (const State & s) const noexcept -> std::size_t
    {
        std::size_t h = s.size();
        for (auto x : s)
            h = combine_hash(h, x);
        return h;
    }

    auto state_to_string(const State & s) -> string
    {
        std::ostringstream out;
        out << "[";
        for (unsigned i = 0 ; i < s.size() ; ++i)
            out << (i ? " " : "") << s[i];
        out << "]";
        return out.str();
    }

    auto Automaton::check_width(VertexSet bag) const -> void
    {
        if (_width != unbounded && bag.size() > _width + 1)
            throw WidthError(name() + ": bag " + bag.to_string() + " exceeds width " + to_string(_width));
    }

    auto Automaton::leaf(const Graph & g, VertexSet bag) const -> State
    {
        check_width(bag);
        return do_leaf(g, bag);
    }

    auto Automaton::unary(const Graph & g, const State & q, VertexSet child, VertexSet parent) const -> State
    {
        check_width(child);
        check_width(parent);
        return do_unary(g, q, child, parent);
    }

    auto Automaton::binary(const Graph & g, const State & q1, const State & q2,
            VertexSet left, VertexSet right, VertexSet parent) const -> State
    {
        check_width(left);
        check_width(right);
        check_width(parent);
        return do_binary(g, q1, q2, left, right, parent);
    }

    auto run(const Automaton & a, const Graph & g, const TreeDecomposition & t) -> State
    {
        auto tree = root_tree(t);
        vector<State> states(t.node_count());
        for (int s : tree.postorder) {
            auto & ch = tree.children[s];
            if (ch.empty())
                states[s] = a.leaf(g, t.bags[s]);
            else if (ch.size() == 1)
                states[s] = a.unary(g, states[ch[0]], t.bags[ch[0]], t.bags[s]);
            else if (ch.size() == 2)
                states[s] = a.binary(g, states[ch[0]], states[ch[1]], t.bags[ch[0]], t.bags[ch[1]], t.bags[s]);
            else
                throw StructureError("node " + to_string(s) + " has " + to_string(ch.size()) + " children; automata need binary trees");
            for (int c : ch)
                State{}.swap(states[c]);
        }
        return states[tree.root];
    }

    auto accepts(const Automaton & a, const Graph & g, const TreeDecomposition & t) -> bool
    {
        return a.accepting(run(a, g, t));
    }

    auto neighbourhood_state(const Automaton & a, const Graph & g, int v, VertexSet nc) -> State
    {
        VertexSet lower = nc.with(v);
        return a.unary(g, a.leaf(g, lower), lower, nc);
    }

    namespace
    {
        // edges of G[x] with at least one endpoint outside keep
        auto edges_leaving(const Graph & g, VertexSet x, VertexSet keep) -> vector<Edge>
        {
            vector<Edge> result;
            for (int u : x)
                for (int v : g.neighbours(u) & x)
                    if (u < v && ! (keep.contains(u) && keep.contains(v)))
                        result.push_back(Edge{ u, v });
            return result;
        }

        struct Blocks
        {
            std::array<signed char, VertexSet::capacity> parent;

            Blocks()
            {
                parent.fill(-1);
            }

            auto add(int v) -> void
            {
                if (parent[v] < 0)
                    parent[v] = v;
            }

            auto find(int v) -> int
            {
                while (parent[v] != v)
                    v = parent[v] = parent[parent[v]];
                return v;
            }

            auto unite(int a, int b) -> bool
            {
                a = find(a);
                b = find(b);
                if (a == b)
                    return false;
                if (a < b)
                    parent[b] = a;
                else
                    parent[a] = b;
                return true;
            }

            auto unite_block(VertexSet block) -> bool
            {
                bool fresh = true;
                int first = block.first();
                for (int v : block.without(first))
                    fresh = unite(first, v) && fresh;
                return fresh;
            }

            // the classes of the given vertices, ordered by their minimum vertex
            auto classes(VertexSet over) -> vector<VertexSet>
            {
                vector<VertexSet> result;
                std::array<signed char, VertexSet::capacity> index;
                index.fill(-1);
                for (int v : over) {
                    int r = find(v);
                    if (index[r] < 0) {
                        index[r] = result.size();
                        result.emplace_back();
                    }
                    result[index[r]].insert(v);
                }
                return result;
            }
        };

        /**
         * Connectivity summary of the processed graph with the edges inside the
         * current bag left out: a partition of the bag, whether a cycle has been
         * closed, and how many components have no bag vertex (saturating at 2).
         * The derived fields describe the processed graph with those edges put back.
         */
        struct Connectivity
        {
            bool cycle = false;
            int closed = 0;
            vector<VertexSet> blocks;
            bool full_cycle = false;
            int full_components = 0;

            auto encode() const -> State
            {
                State s{ std::uint64_t(cycle), std::uint64_t(closed), std::uint64_t(full_cycle), std::uint64_t(full_components) };
                for (auto & b : blocks)
                    s.push_back(b.bits());
                return s;
            }

            static auto decode(const State & s) -> Connectivity
            {
                Connectivity c;
                c.cycle = s.at(0);
                c.closed = s.at(1);
                c.full_cycle = s.at(2);
                c.full_components = s.at(3);
                for (unsigned i = 4 ; i < s.size() ; ++i)
                    c.blocks.push_back(VertexSet::from_bits(s[i]));
                return c;
            }

            auto derive(const Graph & g, VertexSet bag) -> void
            {
                Blocks uf;
                for (int v : bag)
                    uf.add(v);
                for (auto & b : blocks)
                    uf.unite_block(b);
                full_cycle = cycle;
                for (auto & e : edges_leaving(g, bag, VertexSet{}))
                    if (! uf.unite(e.u, e.v))
                        full_cycle = true;
                full_components = std::min(2, closed + int(uf.classes(bag).size()));
            }
        };

        auto finish(Connectivity c, const Graph & g, Blocks & uf, VertexSet touched, VertexSet parent) -> Connectivity
        {
            for (auto & cls : uf.classes(touched)) {
                if (! cls.intersects(parent))
                    c.closed = std::min(2, c.closed + 1);
                else
                    c.blocks.push_back(cls & parent);
            }
            for (int v : parent - touched)
                c.blocks.push_back(VertexSet::singleton(v));
            std::sort(c.blocks.begin(), c.blocks.end(), [] (VertexSet a, VertexSet b) { return a.first() < b.first(); });
            c.derive(g, parent);
            return c;
        }

        auto connectivity_leaf(const Graph & g, VertexSet bag) -> Connectivity
        {
            Connectivity c;
            for (int v : bag)
                c.blocks.push_back(VertexSet::singleton(v));
            c.derive(g, bag);
            return c;
        }

        auto connectivity_unary(const Graph & g, const Connectivity & q, VertexSet child, VertexSet parent) -> Connectivity
        {
            Blocks uf;
            for (int v : child)
                uf.add(v);
            for (auto & b : q.blocks)
                uf.unite_block(b);
            Connectivity c;
            c.cycle = q.cycle;
            c.closed = q.closed;
            for (auto & e : edges_leaving(g, child, parent))
                if (! uf.unite(e.u, e.v))
                    c.cycle = true;
            return finish(std::move(c), g, uf, child, parent);
        }

        auto connectivity_binary(const Graph & g, const Connectivity & q1, const Connectivity & q2,
                VertexSet left, VertexSet right, VertexSet parent) -> Connectivity
        {
            Blocks uf;
            for (int v : left | right)
                uf.add(v);
            Connectivity c;
            c.cycle = q1.cycle || q2.cycle;
            c.closed = std::min(2, q1.closed + q2.closed);
            for (auto & b : q1.blocks)
                uf.unite_block(b);
            // the two sides share no edges, so a second path between the same pair closes a cycle
            for (auto & b : q2.blocks)
                if (! uf.unite_block(b))
                    c.cycle = true;

            auto add_edges = [&] (VertexSet x) {
                for (auto & e : edges_leaving(g, x, parent))
                    if (! uf.unite(e.u, e.v))
                        c.cycle = true;
            };
            add_edges(left);
            // edges inside both child bags were already added from the left
            for (auto & e : edges_leaving(g, right, parent))
                if (! (left.contains(e.u) && left.contains(e.v)) && ! uf.unite(e.u, e.v))
                    c.cycle = true;

            return finish(std::move(c), g, uf, left | right, parent);
        }

        class ForestAutomaton : public Automaton
        {
            protected:
                static auto dead() -> State
                {
                    return State{ 1, 0, 1, 0 };
                }

                static auto encode(const Connectivity & c) -> State
                {
                    return c.cycle ? dead() : c.encode();
                }

                auto do_leaf(const Graph & g, VertexSet bag) const -> State override
                {
                    return encode(connectivity_leaf(g, bag));
                }

                auto do_unary(const Graph & g, const State & q, VertexSet child, VertexSet parent) const -> State override
                {
                    if (q == dead())
                        return q;
                    return encode(connectivity_unary(g, Connectivity::decode(q), child, parent));
                }

                auto do_binary(const Graph & g, const State & q1, const State & q2,
                        VertexSet left, VertexSet right, VertexSet parent) const -> State override
                {
                    if (q1 == dead() || q2 == dead())
                        return dead();
                    return encode(connectivity_binary(g, Connectivity::decode(q1), Connectivity::decode(q2), left, right, parent));
                }

            public:
                using Automaton::Automaton;

                auto name() const -> string override { return "forest"; }

                auto accepting(const State & q) const -> bool override
                {
                    return ! Connectivity::decode(q).full_cycle;
                }

                auto with_width(int width) const -> AutomatonPtr override
                {
                    return make_shared<ForestAutomaton>(width);
                }
        };

        class ConnectedAutomaton : public Automaton
        {
            protected:
                static auto dead() -> State
                {
                    return State{ 0, 2, 0, 2 };
                }

                // a finished component next to anything else can never become connected
                static auto encode(const Connectivity & c) -> State
                {
                    if (c.closed >= 2 || (c.closed == 1 && ! c.blocks.empty()))
                        return dead();
                    auto s = c.encode();
                    s[0] = 0;
                    s[2] = 0;
                    return s;
                }

                auto do_leaf(const Graph & g, VertexSet bag) const -> State override
                {
                    return encode(connectivity_leaf(g, bag));
                }

                auto do_unary(const Graph & g, const State & q, VertexSet child, VertexSet parent) const -> State override
                {
                    if (q == dead())
                        return q;
                    return encode(connectivity_unary(g, Connectivity::decode(q), child, parent));
                }

                auto do_binary(const Graph & g, const State & q1, const State & q2,
                        VertexSet left, VertexSet right, VertexSet parent) const -> State override
                {
                    if (q1 == dead() || q2 == dead())
                        return dead();
                    return encode(connectivity_binary(g, Connectivity::decode(q1), Connectivity::decode(q2), left, right, parent));
                }

            public:
                using Automaton::Automaton;

                auto name() const -> string override { return "connected"; }

                auto accepting(const State & q) const -> bool override
                {
                    return Connectivity::decode(q).full_components == 1;
                }

                auto with_width(int width) const -> AutomatonPtr override
                {
                    return make_shared<ConnectedAutomaton>(width);
                }
        };

        class EdgelessAutomaton : public Automaton
        {
            protected:
                auto do_leaf(const Graph & g, VertexSet bag) const -> State override
                {
                    return State{ std::uint64_t(g.has_edge_within(bag)) };
                }

                auto do_unary(const Graph & g, const State & q, VertexSet, VertexSet parent) const -> State override
                {
                    return State{ std::uint64_t(q.at(0) || g.has_edge_within(parent)) };
                }

                auto do_binary(const Graph & g, const State & q1, const State & q2, VertexSet, VertexSet, VertexSet parent) const -> State override
                {
                    return State{ std::uint64_t(q1.at(0) || q2.at(0) || g.has_edge_within(parent)) };
                }

            public:
                using Automaton::Automaton;

                auto name() const -> string override { return "edgeless"; }
                auto accepting(const State & q) const -> bool override { return 0 == q.at(0); }
                auto state_bound() const -> optional<long long> override { return 2; }

                auto with_width(int width) const -> AutomatonPtr override
                {
                    return make_shared<EdgelessAutomaton>(width);
                }
        };

        class TrueAutomaton : public Automaton
        {
            protected:
                auto do_leaf(const Graph &, VertexSet) const -> State override { return State{}; }
                auto do_unary(const Graph &, const State &, VertexSet, VertexSet) const -> State override { return State{}; }
                auto do_binary(const Graph &, const State &, const State &, VertexSet, VertexSet, VertexSet) const -> State override { return State{}; }

            public:
                using Automaton::Automaton;

                auto name() const -> string override { return "true"; }
                auto accepting(const State &) const -> bool override { return true; }
                auto state_bound() const -> optional<long long> override { return 1; }

                auto with_width(int width) const -> AutomatonPtr override
                {
                    return make_shared<TrueAutomaton>(width);
                }
        };

        class SizeModAutomaton : public Automaton
        {
            private:
                int _q, _r;

            protected:
                auto do_leaf(const Graph &, VertexSet bag) const -> State override
                {
                    return State{ std::uint64_t(bag.size() % _r) };
                }

                auto do_unary(const Graph &, const State & q, VertexSet child, VertexSet parent) const -> State override
                {
                    return State{ (q.at(0) + (parent - child).size()) % _r };
                }

                auto do_binary(const Graph &, const State & q1, const State & q2,
                        VertexSet left, VertexSet right, VertexSet parent) const -> State override
                {
                    // the two sides overlap exactly in the vertices common to both child bags
                    long long count = q1.at(0) + q2.at(0) - (left & right).size() + (parent - (left | right)).size();
                    return State{ std::uint64_t(((count % _r) + _r) % _r) };
                }

            public:
                SizeModAutomaton(int q, int r, int width) :
                    Automaton(width),
                    _q(q),
                    _r(r)
                {
                    if (r < 1 || q < 0 || q >= r)
                        throw ContractError("size-mod needs 0 <= q < r");
                }

                auto name() const -> string override { return "size-mod:" + to_string(_q) + ":" + to_string(_r); }
                auto accepting(const State & q) const -> bool override { return int(q.at(0)) == _q; }
                auto state_bound() const -> optional<long long> override { return _r; }

                auto with_width(int width) const -> AutomatonPtr override
                {
                    return make_shared<SizeModAutomaton>(_q, _r, width);
                }
        };

        /**
         * Degrees of bag vertices in the processed graph without the edges inside
         * the bag, saturating at d+1; a failure flag set once a vertex leaves with
         * the wrong degree; and a derived flag for the bag vertices' true degrees.
         */
        class DegreeAutomaton : public Automaton
        {
            private:
                int _d;
                bool _exact;

                struct Counters
                {
                    bool fail = false;
                    VertexSet bag;
                    std::array<int, VertexSet::capacity> degree{};
                };

                auto ok(int degree) const -> bool
                {
                    return _exact ? degree == _d : degree <= _d;
                }

                auto saturate(int degree) const -> int
                {
                    return std::min(degree, _d + 1);
                }

                auto decode(const State & q) const -> Counters
                {
                    Counters c;
                    c.fail = q.at(0);
                    c.bag = VertexSet::from_bits(q.at(2));
                    unsigned i = 3;
                    for (int v : c.bag)
                        c.degree[v] = q.at(i++);
                    return c;
                }

                auto encode(const Graph & g, const Counters & c) const -> State
                {
                    if (c.fail)
                        return State{ 1, 0, 0 };
                    bool bag_ok = true;
                    for (int v : c.bag)
                        bag_ok = bag_ok && ok(saturate(c.degree[v] + (g.neighbours(v) & c.bag).size()));
                    State s{ 0, std::uint64_t(bag_ok), c.bag.bits() };
                    for (int v : c.bag)
                        s.push_back(c.degree[v]);
                    return s;
                }

                // adds the listed edges, then checks and drops vertices not in `parent`
                auto close(const Graph & g, Counters c, const vector<Edge> & edges, VertexSet parent) const -> State
                {
                    for (auto & e : edges) {
                        c.degree[e.u] = saturate(c.degree[e.u] + 1);
                        c.degree[e.v] = saturate(c.degree[e.v] + 1);
                    }
                    for (int v : c.bag - parent)
                        if (! ok(c.degree[v]))
                            c.fail = true;
                    for (int v : parent - c.bag)
                        c.degree[v] = 0;
                    c.bag = parent;
                    return encode(g, c);
                }

            protected:
                auto do_leaf(const Graph & g, VertexSet bag) const -> State override
                {
                    Counters c;
                    c.bag = bag;
                    return encode(g, c);
                }

                auto do_unary(const Graph & g, const State & q, VertexSet child, VertexSet parent) const -> State override
                {
                    if (q.at(0))
                        return q;
                    return close(g, decode(q), edges_leaving(g, child, parent), parent);
                }

                auto do_binary(const Graph & g, const State & q1, const State & q2,
                        VertexSet left, VertexSet right, VertexSet parent) const -> State override
                {
                    if (q1.at(0))
                        return q1;
                    if (q2.at(0))
                        return q2;
                    auto a = decode(q1), b = decode(q2);
                    Counters c;
                    c.bag = left | right;
                    for (int v : c.bag)
                        c.degree[v] = saturate((left.contains(v) ? a.degree[v] : 0) + (right.contains(v) ? b.degree[v] : 0));
                    auto edges = edges_leaving(g, left, parent);
                    for (auto & e : edges_leaving(g, right, parent))
                        if (! (left.contains(e.u) && left.contains(e.v)))
                            edges.push_back(e);
                    return close(g, c, edges, parent);
                }

            public:
                DegreeAutomaton(int d, bool exact, int width) :
                    Automaton(width),
                    _d(d),
                    _exact(exact)
                {
                    if (d < 0)
                        throw ContractError("degree bound must be nonnegative");
                }

                auto name() const -> string override
                {
                    return string(_exact ? "degree-exact:" : "degree-cap:") + to_string(_d);
                }

                auto accepting(const State & q) const -> bool override
                {
                    return 0 == q.at(0) && 1 == q.at(1);
                }

                auto with_width(int width) const -> AutomatonPtr override
                {
                    return make_shared<DegreeAutomaton>(_d, _exact, width);
                }
        };

        /// States are the factors' states, each preceded by its length.
        class ProductAutomaton : public Automaton
        {
            private:
                vector<AutomatonPtr> _factors;

                auto split(const State & q) const -> vector<State>
                {
                    vector<State> result;
                    unsigned i = 0;
                    for (unsigned f = 0 ; f < _factors.size() ; ++f) {
                        auto len = q.at(i++);
                        result.emplace_back(q.begin() + i, q.begin() + i + len);
                        i += len;
                    }
                    return result;
                }

                static auto join(const vector<State> & parts) -> State
                {
                    State result;
                    for (auto & p : parts) {
                        result.push_back(p.size());
                        result.insert(result.end(), p.begin(), p.end());
                    }
                    return result;
                }

            protected:
                auto do_leaf(const Graph & g, VertexSet bag) const -> State override
                {
                    vector<State> parts;
                    for (auto & f : _factors)
                        parts.push_back(f->leaf(g, bag));
                    return join(parts);
                }

                auto do_unary(const Graph & g, const State & q, VertexSet child, VertexSet parent) const -> State override
                {
                    auto parts = split(q);
                    for (unsigned f = 0 ; f < _factors.size() ; ++f)
                        parts[f] = _factors[f]->unary(g, parts[f], child, parent);
                    return join(parts);
                }

                auto do_binary(const Graph & g, const State & q1, const State & q2,
                        VertexSet left, VertexSet right, VertexSet parent) const -> State override
                {
                    auto p1 = split(q1), p2 = split(q2);
                    for (unsigned f = 0 ; f < _factors.size() ; ++f)
                        p1[f] = _factors[f]->binary(g, p1[f], p2[f], left, right, parent);
                    return join(p1);
                }

            public:
                ProductAutomaton(vector<AutomatonPtr> factors, int width) :
                    Automaton(width)
                {
                    for (auto & f : factors)
                        _factors.push_back(f->with_width(width));
                }

                auto name() const -> string override
                {
                    string result = "product(";
                    for (unsigned f = 0 ; f < _factors.size() ; ++f)
                        result += (f ? "," : "") + _factors[f]->name();
                    return result + ")";
                }

                auto accepting(const State & q) const -> bool override
                {
                    auto parts = split(q);
                    for (unsigned f = 0 ; f < _factors.size() ; ++f)
                        if (! _factors[f]->accepting(parts[f]))
                            return false;
                    return true;
                }

                auto state_bound() const -> optional<long long> override
                {
                    long long result = 1;
                    for (auto & f : _factors) {
                        auto b = f->state_bound();
                        if (! b)
                            return std::nullopt;
                        result *= *b;
                    }
                    return result;
                }

                auto with_width(int width) const -> AutomatonPtr override
                {
                    return make_shared<ProductAutomaton>(_factors, width);
                }
        };
    }

    auto make_edgeless(int width) -> AutomatonPtr { return make_shared<EdgelessAutomaton>(width); }
    auto make_forest(int width) -> AutomatonPtr { return make_shared<ForestAutomaton>(width); }
    auto make_connected(int width) -> AutomatonPtr { return make_shared<ConnectedAutomaton>(width); }
    auto make_degree_cap(int d, int width) -> AutomatonPtr { return make_shared<DegreeAutomaton>(d, false, width); }
    auto make_degree_exact(int d, int width) -> AutomatonPtr { return make_shared<DegreeAutomaton>(d, true, width); }
    auto make_size_mod(int q, int r, int width) -> AutomatonPtr { return make_shared<SizeModAutomaton>(q, r, width); }
    auto make_true(int width) -> AutomatonPtr { return make_shared<TrueAutomaton>(width); }

    auto make_product(vector<AutomatonPtr> factors, int width) -> AutomatonPtr
    {
        return make_shared<ProductAutomaton>(std::move(factors), width);
    }

    auto preset_names() -> vector<string>
    {
        return { "mwis", "forest", "tree", "path", "cycle" };
    }

    auto preset_treewidth(const string & preset) -> int
    {
        if (preset == "mwis")
            return 0;
        if (preset == "forest" || preset == "tree" || preset == "path")
            return 1;
        if (preset == "cycle")
            return 2;
        throw ContractError("unknown problem '" + preset + "'");
    }

    namespace
    {
        auto parse_small_int(const string & s, const string & spec) -> int
        {
            try {
                std::size_t used = 0;
                int result = std::stoi(s, &used);
                if (used != s.size())
                    throw std::invalid_argument(s);
                return result;
            }
            catch (const std::logic_error &) {
                throw ContractError("malformed automaton specification '" + spec + "'");
            }
        }
    }

    auto make_factor(const string & spec, int width) -> AutomatonPtr
    {
        vector<string> parts;
        std::stringstream in(spec);
        for (string p ; std::getline(in, p, ':') ; )
            parts.push_back(p);
        if (parts.empty())
            throw ContractError("empty automaton specification");

        auto & head = parts[0];
        if (parts.size() == 1) {
            if (head == "edgeless")
                return make_edgeless(width);
            if (head == "forest")
                return make_forest(width);
            if (head == "connected")
                return make_connected(width);
            if (head == "true")
                return make_true(width);
        }
        else if (parts.size() == 2 && head == "degree-cap")
            return make_degree_cap(parse_small_int(parts[1], spec), width);
        else if (parts.size() == 2 && head == "degree-exact")
            return make_degree_exact(parse_small_int(parts[1], spec), width);
        else if (parts.size() == 3 && head == "size-mod")
            return make_size_mod(parse_small_int(parts[1], spec), parse_small_int(parts[2], spec), width);
        throw ContractError("unknown automaton specification '" + spec + "'");
    }

    auto make_preset(const string & preset, int width, const vector<string> & extras) -> AutomatonPtr
    {
        vector<AutomatonPtr> factors;
        if (preset == "mwis")
            factors = { make_edgeless(width) };
        else if (preset == "forest")
            factors = { make_forest(width) };
        else if (preset == "tree")
            factors = { make_forest(width), make_connected(width) };
        else if (preset == "path")
            factors = { make_forest(width), make_connected(width), make_degree_cap(2, width) };
        else if (preset == "cycle")
            factors = { make_connected(width), make_degree_exact(2, width) };
        else
            throw ContractError("unknown problem '" + preset + "'");

        for (auto & e : extras)
            factors.push_back(make_factor(e, width));
        if (factors.size() == 1)
            return factors[0];
        return make_product(std::move(factors), width);
    }
}
