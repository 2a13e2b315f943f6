/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef IMTW_GUARD_SIGNATURES_HH
#define IMTW_GUARD_SIGNATURES_HH 1

#include <imtw/automata.hh>
#include <imtw/graph.hh>
#include <imtw/guards.hh>
#include <imtw/vertex_set.hh>
#include <imtw/weights.hh>

#include <compare>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace imtw
{
    /**
     * A signature for a bag B: a cover C of the solution's edges touching B,
     * an independent set S of G[B] as seen by some maximal independent set of
     * G, and a set D of solution vertices whose neighbourhoods exclude part
     * of S.
     */
    struct BasicSignature
    {
        VertexSet c, s, d, b;

        auto operator== (const BasicSignature &) const -> bool = default;
    };

    enum class FamilyMode
    {
        bounded,
        all
    };

    auto family_mode_name(FamilyMode m) -> std::string;

    /// Throws ContractError for names other than "bounded" and "all".
    auto parse_family_mode(const std::string & s) -> FamilyMode;

    /// {I ∩ b : I a maximal independent set of g}, sorted and deduplicated.
    auto mis_projections(const Graph & g, VertexSet b, const Guards & guards = Guards{}) -> std::vector<VertexSet>;

    /// As above, from an already listed collection of maximal independent sets.
    auto project_sets(const std::vector<VertexSet> & sets, VertexSet b) -> std::vector<VertexSet>;

    /// S \ (N(D) ∪ C).
    auto dangling_vertices(const BasicSignature & sig, const Graph & g) -> VertexSet;

    struct DanglingType
    {
        bool negative;
        VertexSet trace;
        State q;

        auto operator<=> (const DanglingType &) const = default;
    };

    /**
     * Groups u by type: sign, neighbourhood in c, and the automaton's state on
     * the vertex with that neighbourhood. Without an automaton, groups by the
     * neighbourhood in c alone. Each group is ascending by (weight, vertex order).
     */
    auto classify_dangling(const Graph & g, const VertexWeights & weights, VertexSet u, VertexSet c,
            const Automaton * a) -> std::vector<std::vector<int>>;

    /// Suffixes of a sorted group, as sets, shortest first.
    auto suffix_family(const std::vector<int> & group, long long q_bound, int w, FamilyMode mode) -> std::vector<VertexSet>;

    struct FamilyOptions
    {
        FamilyMode mode = FamilyMode::bounded;
        /// Drop candidates Y with tw(G[Y]) > w, which can never be a solution's trace.
        bool treewidth_filter = true;
    };

    struct FamilyStatistics
    {
        long long covers = 0;
        long long signatures = 0;
        long long distinct_keys = 0;
        long long generated = 0;
    };

    /**
     * Enumerates candidate families for bags of one graph, caching the maximal
     * independent sets and neighbourhood states shared between bags. Bounded
     * mode falls back to all suffixes when the automaton declares no state bound.
     */
    class FamilyEnumerator
    {
        private:
            const Graph & _g;
            const VertexWeights & _weights;
            int _w;
            AutomatonPtr _automaton;
            FamilyOptions _options;
            Guards _guards;
            std::vector<VertexSet> _maximal_independent_sets;
            bool _have_mis = false;
            std::map<std::pair<int, VertexSet>, State> _neighbourhood_states;
            FamilyStatistics _statistics;

            auto groups(VertexSet u, VertexSet c, bool typed) -> std::vector<std::vector<int>>;

        public:
            FamilyEnumerator(const Graph & g, const VertexWeights & weights, int w, AutomatonPtr a,
                    FamilyOptions options = FamilyOptions{}, const Guards & guards = Guards{});

            /// The effective mode, after the fallback.
            auto mode() const -> FamilyMode;

            /// Candidate subsets of b, sorted and deduplicated, assuming μ(b) ≤ k.
            auto family(VertexSet b, int k) -> std::vector<VertexSet>;

            auto statistics() const -> const FamilyStatistics & { return _statistics; }
    };

    auto enumerate_bag_family(const Graph & g, const VertexWeights & weights, VertexSet b, int k, int w,
            const AutomatonPtr & a, FamilyMode mode, const Guards & guards = Guards{}) -> std::vector<VertexSet>;

    /**
     * A signature of x for b, with C a lexicographically first minimum cover,
     * S a greedy maximal independent set of G[b] and D greedily minimised.
     * Throws InternalError if C or D exceeds the size bounds for μ(b) ≤ k.
     */
    auto construct_signature_for(const Graph & g, VertexSet x, VertexSet b, int k, int w,
            const Guards & guards = Guards{}) -> BasicSignature;

    /// Checks the three signature conditions against x; empty if valid, else the first failure.
    auto signature_violation(const Graph & g, VertexSet x, const BasicSignature & sig,
            const Guards & guards = Guards{}) -> std::string;

    /**
     * The number of distinct states seen when repeatedly attaching another copy
     * of v, adjacent to N(v) ∩ c, to a graph whose state at bag c is q.
     */
    auto orbit_size(const Automaton & a, const Graph & g, const State & q, VertexSet c, int v) -> long long;
}

#endif
