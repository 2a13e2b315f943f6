/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <imtw/dp_engine.hh>
#include <imtw/errors.hh>
#include <imtw/graph_algorithms.hh>

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

using std::make_shared;
using std::map;
using std::optional;
using std::pair;
using std::string;
using std::to_string;
using std::tuple;
using std::unordered_map;
using std::vector;

namespace imtw
{
    namespace
    {
        struct UnaryKey
        {
            int q;
            VertexSet child, parent;

            auto operator== (const UnaryKey &) const -> bool = default;
        };

        struct UnaryKeyHash
        {
            auto operator() (const UnaryKey & k) const noexcept -> std::size_t
            {
                return scramble(k.child.bits() ^ std::rotl(k.parent.bits(), 32) ^ (std::uint64_t(k.q) * 0x9e3779b97f4a7c15ULL));
            }
        };

        struct BinaryKey
        {
            int q1, q2;
            VertexSet left, right, parent;

            auto operator== (const BinaryKey &) const -> bool = default;
        };

        struct BinaryKeyHash
        {
            auto operator() (const BinaryKey & k) const noexcept -> std::size_t
            {
                return combine_hash(combine_hash(combine_hash(combine_hash(std::size_t(k.q1), std::uint64_t(k.q2)), k.left.bits()), k.right.bits()), k.parent.bits());
            }
        };

        struct PairHash
        {
            auto operator() (const pair<VertexSet, VertexSet> & p) const noexcept -> std::size_t
            {
                return combine_hash(p.first.bits(), p.second.bits());
            }
        };

        using Candidates = vector<Table::value_type>;

        class Runner
        {
            private:
                const Graph & _g;
                const VertexWeights & _weights;
                const SuperniceDecomposition & _host;
                const vector<FamilyPtr> & _families;
                const Automaton & _a;
                const Guards & _guards;
                int _capacity;

                unordered_map<State, int, StateHash> _state_ids;
                vector<State> _states;
                unordered_map<UnaryKey, int, UnaryKeyHash> _unary;
                unordered_map<BinaryKey, int, BinaryKeyHash> _binary;

            public:
                DPStatistics statistics;

                Runner(const Graph & g, const VertexWeights & weights, const SuperniceDecomposition & host,
                        const vector<FamilyPtr> & families, const Automaton & a, const Guards & guards) :
                    _g(g), _weights(weights), _host(host), _families(families), _a(a), _guards(guards),
                    _capacity(host.ell() + 1)
                {
                }

                auto take_states() -> vector<State>
                {
                    return std::move(_states);
                }

                auto state(int q) const -> const State &
                {
                    return _states[q];
                }

                auto intern(State s) -> int
                {
                    auto [it, inserted] = _state_ids.emplace(std::move(s), int(_states.size()));
                    if (inserted)
                        _states.push_back(it->first);
                    return it->second;
                }

                auto unary(int q, VertexSet child, VertexSet parent) -> int
                {
                    UnaryKey key{ q, child, parent };
                    auto it = _unary.find(key);
                    if (it != _unary.end())
                        return it->second;
                    int result = intern(_a.unary(_g, _states[q], child, parent));
                    _unary.emplace(key, result);
                    return result;
                }

                auto binary(int q1, int q2, VertexSet left, VertexSet right, VertexSet parent) -> int
                {
                    BinaryKey key{ q1, q2, left, right, parent };
                    auto it = _binary.find(key);
                    if (it != _binary.end())
                        return it->second;
                    int result = intern(_a.binary(_g, _states[q1], _states[q2], left, right, parent));
                    _binary.emplace(key, result);
                    return result;
                }

                auto offer(int t, Candidates & table, const TupleKey & key, VertexSet x1, VertexSet x2, const Weight & w) -> void
                {
                    if (family_contains(*_families[t], key.x))
                        table.emplace_back(key, Witness{ x1, x2, w });
                }

                auto finish(int t, Candidates & candidates) -> Table
                {
                    auto table = Table::from_candidates(std::move(candidates), _weights);
                    if (static_cast<long long>(table.size()) > _guards.max_table_size)
                        throw ResourceError("table at node " + to_string(t) + " exceeds " + to_string(_guards.max_table_size) + " entries");
                    return table;
                }

                auto initial(int t) -> Table
                {
                    Candidates table;
                    offer(t, table, TupleKey{ VertexSet{}, VertexSet{}, VertexSet{}, intern(_a.leaf(_g, VertexSet{})) },
                            VertexSet{}, VertexSet{}, Weight{ 0 });
                    return finish(t, table);
                }

                auto introduce(int t, int v, const Table & child) -> Table
                {
                    Candidates table;
                    for (auto & [key, wit] : child) {
                        int keep = unary(key.q, key.b1, key.b1);
                        offer(t, table, TupleKey{ key.x, key.b1, VertexSet{}, keep }, wit.x1, wit.x2, wit.weight);

                        Weight heavier = wit.weight + _weights.weight(v);
                        if (key.b1.size() + 1 <= _capacity) {
                            auto b1 = key.b1.with(v);
                            offer(t, table, TupleKey{ key.x.with(v), b1, VertexSet{}, unary(key.q, key.b1, b1) },
                                    wit.x1.with(v), wit.x2, heavier);
                        }

                        if (! _g.neighbours(v).intersects(key.x - key.b1))
                            offer(t, table, TupleKey{ key.x.with(v), key.b1, VertexSet{}, keep }, wit.x1, wit.x2.with(v), heavier);
                    }
                    return finish(t, table);
                }

                auto forget(int t, int v, const Table & child) -> Table
                {
                    Candidates table;
                    for (auto & [key, wit] : child) {
                        if (! key.x.contains(v))
                            offer(t, table, TupleKey{ key.x, key.b1, VertexSet{}, unary(key.q, key.b1, key.b1) },
                                    wit.x1, wit.x2, wit.weight);
                        else if (key.b2 == VertexSet::singleton(v))
                            offer(t, table, TupleKey{ key.x.without(v), key.b1, VertexSet{}, unary(key.q, key.b1.with(v), key.b1) },
                                    wit.x1, wit.x2, wit.weight);
                        else if (key.b1.contains(v))
                            offer(t, table, TupleKey{ key.x.without(v), key.b1, VertexSet{}, unary(key.q, key.b1, key.b1) },
                                    wit.x1, wit.x2, wit.weight);
                    }
                    return finish(t, table);
                }

                auto join(int t, const Table & left, const Table & right) -> Table
                {
                    VertexSet bag = _host.bag(t);
                    unordered_map<pair<VertexSet, VertexSet>, vector<const Table::value_type *>, PairHash> index;
                    for (auto & entry : right)
                        index[{ entry.first.x, entry.first.b1 & bag }].push_back(&entry);

                    Candidates table;
                    for (auto & [k1, w1] : left) {
                        auto it = index.find({ k1.x, k1.b1 & bag });
                        if (it == index.end())
                            continue;
                        Weight shared = _weights.total(k1.x);
                        for (auto * e : it->second) {
                            auto & [k2, w2] = *e;
                            auto b1 = k1.b1 | k2.b1;
                            if (b1.size() > _capacity)
                                continue;
                            offer(t, table, TupleKey{ k1.x, b1, VertexSet{}, binary(k1.q, k2.q, k1.b1, k2.b1, b1) },
                                    w1.x1 | w2.x1, w1.x2 | w2.x2, w1.weight + w2.weight - shared);
                        }
                    }
                    return finish(t, table);
                }

                auto neutral(int t, const Table & child) -> Table
                {
                    VertexSet bag = _host.bag(t);
                    Candidates table;
                    for (auto & [key, wit] : child) {
                        offer(t, table, TupleKey{ key.x, key.b1, VertexSet{}, unary(key.q, key.b1, key.b1) }, wit.x1, wit.x2, wit.weight);
                        for (int v : key.b1 - bag)
                            if (! _g.neighbours(v).intersects(key.x - key.b1)) {
                                auto b1 = key.b1.without(v);
                                offer(t, table, TupleKey{ key.x, b1, VertexSet{}, unary(key.q, key.b1, b1) }, wit.x1, wit.x2, wit.weight);
                            }
                    }
                    return finish(t, table);
                }

                auto top(int t, int v, const Table & child) -> Table
                {
                    Candidates table;
                    for (auto & [key, wit] : child) {
                        offer(t, table, TupleKey{ key.x, key.b1, VertexSet{}, unary(key.q, key.b1, key.b1) }, wit.x1, wit.x2, wit.weight);
                        if (key.x.contains(v) && ! key.b1.contains(v) && key.b1.size() + 1 <= _capacity) {
                            if (! (_g.neighbours(v) & wit.x1).subset_of(key.b1)) {
                                ++statistics.top_condition_rejections;
                                continue;
                            }
                            auto b1v = key.b1.with(v);
                            offer(t, table, TupleKey{ key.x, key.b1, VertexSet::singleton(v), unary(key.q, key.b1, b1v) },
                                    wit.x1, wit.x2, wit.weight);
                        }
                    }
                    return finish(t, table);
                }

        };
    }

    auto family_contains(const Family & f, VertexSet x) -> bool
    {
        return std::binary_search(f.begin(), f.end(), x);
    }

    auto unrestricted_families(const SuperniceDecomposition & host) -> vector<FamilyPtr>
    {
        map<VertexSet, FamilyPtr> by_bag;
        vector<FamilyPtr> result;
        for (int t = 0 ; t < host.node_count() ; ++t) {
            auto & f = by_bag[host.bag(t)];
            if (! f) {
                Family all;
                for_each_subset(host.bag(t), [&] (VertexSet s) { all.push_back(s); });
                std::sort(all.begin(), all.end());
                f = make_shared<const Family>(std::move(all));
            }
            result.push_back(f);
        }
        return result;
    }

    auto propagate_families(const SuperniceDecomposition & host, const TreeDecomposition & original,
            const vector<Family> & families) -> vector<FamilyPtr>
    {
        if (families.size() != original.bags.size())
            throw ContractError("need one family per original bag");

        map<VertexSet, FamilyPtr> by_bag;
        vector<FamilyPtr> result;
        for (int t = 0 ; t < host.node_count() ; ++t) {
            VertexSet bag = host.bag(t);
            auto & f = by_bag[bag];
            if (! f) {
                optional<Family> meet;
                for (unsigned s = 0 ; s < original.bags.size() ; ++s) {
                    if (! bag.subset_of(original.bags[s]))
                        continue;
                    Family traces;
                    for (auto & y : families[s])
                        traces.push_back(y & bag);
                    std::sort(traces.begin(), traces.end());
                    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
                    if (! meet)
                        meet = std::move(traces);
                    else {
                        Family both;
                        std::set_intersection(meet->begin(), meet->end(), traces.begin(), traces.end(), std::back_inserter(both));
                        meet = std::move(both);
                    }
                }
                if (! meet)
                    throw ContractError("host bag " + bag.to_string() + " is inside no original bag");
                f = make_shared<const Family>(std::move(*meet));
            }
            result.push_back(f);
        }
        return result;
    }

    auto TupleKeyHash::operator() (const TupleKey & k) const noexcept -> std::size_t
    {
        return combine_hash(combine_hash(combine_hash(std::size_t(k.q), k.x.bits()), k.b1.bits()), k.b2.bits());
    }

    auto Table::from_candidates(vector<value_type> candidates, const VertexWeights & weights) -> Table
    {
        std::sort(candidates.begin(), candidates.end(), [] (const value_type & a, const value_type & b) { return a.first < b.first; });
        Table result;
        for (auto & c : candidates) {
            if (result._entries.empty() || result._entries.back().first != c.first)
                result._entries.push_back(c);
            else {
                auto & kept = result._entries.back().second;
                if (weights.better(c.second.x1 | c.second.x2, c.second.weight, kept.x1 | kept.x2, kept.weight))
                    kept = c.second;
            }
        }
        return result;
    }

    auto Table::find(const TupleKey & key) const -> const Witness *
    {
        auto it = std::lower_bound(_entries.begin(), _entries.end(), key, [] (const value_type & e, const TupleKey & k) { return e.first < k; });
        return it != _entries.end() && it->first == key ? &it->second : nullptr;
    }

    auto DPResult::state_index(const State & q) const -> int
    {
        auto it = std::find(states.begin(), states.end(), q);
        return it == states.end() ? -1 : int(it - states.begin());
    }

    auto solve_dp(const Graph & g, const VertexWeights & weights, const SuperniceDecomposition & host,
            const vector<FamilyPtr> & families, const Automaton & a, DPOptions options, const Guards & guards) -> DPResult
    {
        if (int(families.size()) != host.node_count())
            throw ContractError("need one family per host node");
        if (weights.size() < g.capacity())
            throw ContractError("need a weight for every vertex");

        Runner runner(g, weights, host, families, a, guards);
        vector<Table> tables(host.node_count());
        vector<char> stable(host.node_count(), 0);
        runner.statistics.table_sizes.assign(host.node_count(), 0);

        for (int t : host.postorder()) {
            auto & label = host.label(t);
            auto & kids = host.children(t);
            Table table;
            switch (label.kind) {
                case NodeKind::initial:
                    table = runner.initial(t);
                    break;
                case NodeKind::introduce:
                    table = runner.introduce(t, label.vertex, tables[kids[0]]);
                    break;
                case NodeKind::forget:
                    table = runner.forget(t, label.vertex, tables[kids[0]]);
                    break;
                case NodeKind::join:
                    table = runner.join(t, tables[kids[0]], tables[kids[1]]);
                    break;
                case NodeKind::top:
                    table = runner.top(t, label.vertex, tables[kids[0]]);
                    break;
                case NodeKind::neutral: {
                    int c = kids[0];
                    bool same_family = families[t] == families[c] || *families[t] == *families[c];
                    if (options.neutral_fixpoint && stable[c] && same_family) {
                        if (options.keep_tables)
                            table = tables[c];
                        else
                            table = std::move(tables[c]);
                        stable[t] = 1;
                        ++runner.statistics.fixpoint_reuses;
                    }
                    else {
                        table = runner.neutral(t, tables[c]);
                        stable[t] = same_family && table == tables[c];
                    }
                    break;
                }
            }

            long long size = table.size();
            runner.statistics.table_sizes[t] = size;
            runner.statistics.total_entries += size;
            runner.statistics.largest_table = std::max(runner.statistics.largest_table, size);
            tables[t] = std::move(table);
            if (! options.keep_tables)
                for (int c : kids)
                    tables[c] = Table{};
        }

        DPResult result;
        for (auto & [key, wit] : tables[host.root()]) {
            if (! key.x.empty() || ! key.b1.empty() || ! key.b2.empty() || ! a.accepting(runner.state(key.q)))
                continue;
            auto x = wit.x1 | wit.x2;
            if (! result.best || weights.better(x, wit.weight, result.best->vertices, result.best->weight))
                result.best = Solution{ x, wit.weight };
        }

        result.statistics = std::move(runner.statistics);
        result.states = runner.take_states();
        if (options.keep_tables)
            result.tables = std::move(tables);
        return result;
    }

    auto audit_tables(const Graph & g, const VertexWeights & weights, const SuperniceDecomposition & host,
            const vector<FamilyPtr> & families, const DPResult & result) -> ValidationReport
    {
        ValidationReport report;
        if (int(result.tables.size()) != host.node_count()) {
            report.add(ViolationKind::structure, "tables were not kept");
            return report;
        }

        for (int t = 0 ; t < host.node_count() ; ++t) {
            VertexSet bag = host.bag(t), subtree = host.subtree(t);
            for (auto & [key, wit] : result.tables[t]) {
                auto problem = [&] (const string & what) {
                    report.add(ViolationKind::structure, "node " + to_string(t) + " tuple (" + key.x.to_string() + ", "
                            + key.b1.to_string() + ", " + key.b2.to_string() + ", " + to_string(key.q) + "): " + what, { t });
                };
                auto x = wit.x1 | wit.x2;
                if (wit.x1.intersects(wit.x2))
                    problem("X1 and X2 overlap");
                if (! x.subset_of(subtree))
                    problem("witness leaves the subtree");
                if ((x & bag) != key.x)
                    problem("witness disagrees with X_t");
                if (! key.b1.subset_of(wit.x1))
                    problem("B1 is not inside X1");
                if ((wit.x1 & bag) != (key.b1 & bag))
                    problem("B1 misses X1 on the bag");
                if (key.b1.size() > host.ell() + 1)
                    problem("B1 is too large");
                if (! key.b2.subset_of(wit.x2 & host.topv(t)))
                    problem("B2 is not the top vertex in X2");
                if (! is_independent_set(g, wit.x2))
                    problem("X2 is not independent");
                for (int v : wit.x2 & bag)
                    if (! (g.neighbours(v) & wit.x1).subset_of(key.b1))
                        problem("X1 neighbour of " + to_string(v) + " is not in B1");
                if (weights.total(x) != wit.weight)
                    problem("weight is wrong");
                if (! family_contains(*families[t], key.x))
                    problem("X_t is not in the family");
                if (key.q < 0 || key.q >= int(result.states.size()))
                    problem("unknown state");
            }
        }
        return report;
    }
}
