/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <imtw/errors.hh>
#include <imtw/graph_algorithms.hh>
#include <imtw/signatures.hh>

#include <algorithm>
#include <set>
#include <tuple>

using std::map;
using std::pair;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace imtw
{
    auto family_mode_name(FamilyMode m) -> string
    {
        return m == FamilyMode::bounded ? "bounded" : "all";
    }

    auto parse_family_mode(const string & s) -> FamilyMode
    {
        if (s == "bounded")
            return FamilyMode::bounded;
        if (s == "all")
            return FamilyMode::all;
        throw ContractError("unknown family mode '" + s + "'");
    }

    auto project_sets(const vector<VertexSet> & sets, VertexSet b) -> vector<VertexSet>
    {
        vector<VertexSet> result;
        for (auto & s : sets)
            result.push_back(s & b);
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }

    auto mis_projections(const Graph & g, VertexSet b, const Guards & guards) -> vector<VertexSet>
    {
        return project_sets(maximal_independent_sets(g, guards), b);
    }

    auto dangling_vertices(const BasicSignature & sig, const Graph & g) -> VertexSet
    {
        return sig.s - (g.neighbourhood(sig.d) | sig.c);
    }

    namespace
    {
        auto sort_group(vector<int> & group, const VertexWeights & weights) -> void
        {
            std::sort(group.begin(), group.end(), [&] (int u, int v) {
                if (weights.weight(u) != weights.weight(v))
                    return weights.weight(u) < weights.weight(v);
                return weights.precedes(u, v);
            });
        }

        template <typename Key_, typename KeyOf_>
        auto group_by(VertexSet u, const VertexWeights & weights, KeyOf_ && key_of) -> vector<vector<int>>
        {
            map<Key_, vector<int>> groups;
            for (int v : u)
                groups[key_of(v)].push_back(v);
            vector<vector<int>> result;
            for (auto & [_, group] : groups) {
                sort_group(group, weights);
                result.push_back(std::move(group));
            }
            return result;
        }
    }

    auto classify_dangling(const Graph & g, const VertexWeights & weights, VertexSet u, VertexSet c,
            const Automaton * a) -> vector<vector<int>>
    {
        if (! a)
            return group_by<VertexSet>(u, weights, [&] (int v) { return g.neighbours(v) & c; });
        return group_by<DanglingType>(u, weights, [&] (int v) {
            VertexSet trace = g.neighbours(v) & c;
            return DanglingType{ weights.weight(v) < 0, trace, neighbourhood_state(*a, g, v, trace) };
        });
    }

    auto suffix_family(const vector<int> & group, long long q_bound, int w, FamilyMode mode) -> vector<VertexSet>
    {
        long long n = group.size();
        vector<VertexSet> result;
        VertexSet suffix;
        for (long long length = 0 ; length <= n ; ++length) {
            if (length > 0)
                suffix.insert(group[n - length]);
            if (mode == FamilyMode::all || length <= std::max<long long>(q_bound, w + 1) || length >= n - q_bound)
                result.push_back(suffix);
        }
        return result;
    }

    FamilyEnumerator::FamilyEnumerator(const Graph & g, const VertexWeights & weights, int w, AutomatonPtr a,
            FamilyOptions options, const Guards & guards) :
        _g(g),
        _weights(weights),
        _w(w),
        _automaton(a->with_width(Automaton::unbounded)),
        _options(options),
        _guards(guards)
    {
        if (w < 0)
            throw ContractError("treewidth bound must be nonnegative");
    }

    auto FamilyEnumerator::mode() const -> FamilyMode
    {
        return _automaton->state_bound() ? _options.mode : FamilyMode::all;
    }

    auto FamilyEnumerator::groups(VertexSet u, VertexSet c, bool typed) -> vector<vector<int>>
    {
        if (! typed)
            return classify_dangling(_g, _weights, u, c, nullptr);
        return group_by<DanglingType>(u, _weights, [&] (int v) {
            VertexSet trace = _g.neighbours(v) & c;
            auto [it, fresh] = _neighbourhood_states.try_emplace(pair{ v, trace });
            if (fresh)
                it->second = neighbourhood_state(*_automaton, _g, v, trace);
            return DanglingType{ _weights.weight(v) < 0, trace, it->second };
        });
    }

    auto FamilyEnumerator::family(VertexSet b, int k) -> vector<VertexSet>
    {
        if (! b.subset_of(_g.vertices()))
            throw ContractError("bag " + b.to_string() + " is not inside the graph");
        if (k < 0)
            throw ContractError("k must be nonnegative");

        if (! _have_mis) {
            _maximal_independent_sets = maximal_independent_sets(_g, _guards);
            _have_mis = true;
        }
        auto projections = project_sets(_maximal_independent_sets, b);

        FamilyMode effective = mode();
        long long q_bound = _automaton->state_bound().value_or(0);
        long long cover_limit = 2LL * k * (_w + 1), d_limit = 1LL * k * (_w + 1);

        set<VertexSet> candidates;
        set<std::tuple<VertexSet, VertexSet, VertexSet>> seen;

        VertexSet cover_universe = _g.closed_neighbourhood(b);
        for_each_subset(cover_universe, [&] (VertexSet c) {
            if (c.size() > cover_limit || ! treewidth_at_most(_g, c, _w, _guards))
                return;
            ++_statistics.covers;

            // sets N(d) ∩ (S \ C) for single d outside C, per S
            for (auto & s : projections) {
                VertexSet open = s - c;
                set<VertexSet> level{ VertexSet{} }, reached{ VertexSet{} };
                set<VertexSet> pieces;
                for (int d : _g.vertices() - c)
                    pieces.insert(_g.neighbours(d) & open);
                for (long long size = 1 ; size <= d_limit && ! level.empty() ; ++size) {
                    set<VertexSet> next;
                    for (auto & m : level)
                        for (auto & p : pieces)
                            if (reached.insert(m | p).second)
                                next.insert(m | p);
                    level = std::move(next);
                }

                for (auto & m : reached) {
                    ++_statistics.signatures;
                    VertexSet u = open - m;
                    if (! seen.emplace(c & b, u, c & _g.neighbourhood(u)).second)
                        continue;
                    ++_statistics.distinct_keys;

                    auto grouped = groups(u, c, effective == FamilyMode::bounded);
                    vector<vector<VertexSet>> choices;
                    for (auto & g : grouped)
                        choices.push_back(suffix_family(g, q_bound, _w, effective));

                    // every combination of one suffix per group
                    vector<unsigned> index(choices.size(), 0);
                    while (true) {
                        VertexSet y = c & b;
                        for (unsigned i = 0 ; i < choices.size() ; ++i)
                            y |= choices[i][index[i]];
                        if (++_statistics.generated > _guards.max_family_size)
                            throw ResourceError("bag family for " + b.to_string() + " exceeds " + to_string(_guards.max_family_size) + " candidates");
                        if (! _options.treewidth_filter || treewidth_at_most(_g, y, _w, _guards))
                            candidates.insert(y);

                        unsigned i = 0;
                        for ( ; i < choices.size() ; ++i) {
                            if (++index[i] < choices[i].size())
                                break;
                            index[i] = 0;
                        }
                        if (i == choices.size())
                            break;
                    }
                }
            }
        });

        return vector<VertexSet>(candidates.begin(), candidates.end());
    }

    auto enumerate_bag_family(const Graph & g, const VertexWeights & weights, VertexSet b, int k, int w,
            const AutomatonPtr & a, FamilyMode mode, const Guards & guards) -> vector<VertexSet>
    {
        FamilyOptions options;
        options.mode = mode;
        return FamilyEnumerator(g, weights, w, a, options, guards).family(b, k);
    }

    namespace
    {
        auto edges_touching(const Graph & g, VertexSet x, VertexSet b) -> vector<Edge>
        {
            vector<Edge> result;
            for (auto & e : induced_subgraph(g, x).edges())
                if (b.contains(e.u) || b.contains(e.v))
                    result.push_back(e);
            return result;
        }
    }

    auto construct_signature_for(const Graph & g, VertexSet x, VertexSet b, int k, int w,
            const Guards & guards) -> BasicSignature
    {
        if (! x.subset_of(g.vertices()) || ! b.subset_of(g.vertices()))
            throw ContractError("sets must lie inside the graph");

        BasicSignature sig;
        sig.b = b;
        sig.c = minimum_vertex_cover(edges_touching(g, x, b), guards);
        if (sig.c.size() > 2LL * k * (w + 1))
            throw InternalError("cover of size " + to_string(sig.c.size()) + " exceeds 2k(w+1) for k=" + to_string(k) + ", w=" + to_string(w));

        sig.s = (x & b) - sig.c;
        for (int v : b - sig.s)
            if (! g.neighbours(v).intersects(sig.s))
                sig.s.insert(v);

        VertexSet must_cover = (sig.s - sig.c) & g.neighbourhood(x - sig.c);
        sig.d = x - sig.c;
        for (int v : x - sig.c)
            if (must_cover.subset_of(g.neighbourhood(sig.d.without(v))))
                sig.d.erase(v);
        if (sig.d.size() > 1LL * k * (w + 1))
            throw InternalError("D of size " + to_string(sig.d.size()) + " exceeds k(w+1) for k=" + to_string(k) + ", w=" + to_string(w));

        return sig;
    }

    auto signature_violation(const Graph & g, VertexSet x, const BasicSignature & sig, const Guards & guards) -> string
    {
        if (! sig.c.subset_of(x))
            return "C is not inside X";
        for (auto & e : edges_touching(g, x, sig.b))
            if (! sig.c.contains(e.u) && ! sig.c.contains(e.v))
                return "edge (" + to_string(e.u) + "," + to_string(e.v) + ") touches B but not C";

        auto projections = mis_projections(g, sig.b, guards);
        if (! std::binary_search(projections.begin(), projections.end(), sig.s))
            return "S is not the trace of a maximal independent set";
        if (! ((x & sig.b) - sig.c).subset_of(sig.s))
            return "X ∩ B \\ C is not inside S";

        if (! sig.d.subset_of(x - sig.c))
            return "D is not inside X \\ C";
        if (! ((sig.s - sig.c) & g.neighbourhood(x - sig.c)).subset_of(g.neighbourhood(sig.d)))
            return "D misses a neighbour of X \\ C in S";
        return "";
    }

    auto orbit_size(const Automaton & a, const Graph & g, const State & q, VertexSet c, int v) -> long long
    {
        if (c.contains(v))
            throw ContractError("orbit vertex must lie outside the bag");
        State attached = a.unary(g, a.leaf(g, c.with(v)), c.with(v), c);
        set<State> seen;
        for (State current = q ; seen.insert(current).second ; )
            current = a.binary(g, current, attached, c, c, c);
        return seen.size();
    }
}
