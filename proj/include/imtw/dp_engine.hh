/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef IMTW_GUARD_DP_ENGINE_HH
#define IMTW_GUARD_DP_ENGINE_HH 1

#include <imtw/automata.hh>
#include <imtw/graph.hh>
#include <imtw/guards.hh>
#include <imtw/oracle.hh>
#include <imtw/supernice.hh>
#include <imtw/tree_decomposition.hh>
#include <imtw/vertex_set.hh>
#include <imtw/weights.hh>

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace imtw
{
    /// Candidate subsets of one bag, sorted.
    using Family = std::vector<VertexSet>;
    using FamilyPtr = std::shared_ptr<const Family>;

    auto family_contains(const Family & f, VertexSet x) -> bool;

    /// Every subset of every bag, for running the dynamic program without a family restriction.
    auto unrestricted_families(const SuperniceDecomposition & host) -> std::vector<FamilyPtr>;

    /**
     * Families for the host's nodes from families on the bags of an original
     * decomposition whose bags each contain or equal some host bag: the
     * intersection, over original bags containing the host bag, of the traces
     * of their families on it.
     */
    auto propagate_families(const SuperniceDecomposition & host, const TreeDecomposition & original,
            const std::vector<Family> & families) -> std::vector<FamilyPtr>;

    /// (X_t, B1, B2, q) with q an index into the run's interned states.
    struct TupleKey
    {
        VertexSet x, b1, b2;
        int q;

        auto operator== (const TupleKey &) const -> bool = default;
        auto operator<=> (const TupleKey &) const = default;
    };

    struct TupleKeyHash
    {
        auto operator() (const TupleKey & k) const noexcept -> std::size_t;
    };

    /// The best pair (X1, X2) found for a tuple.
    struct Witness
    {
        VertexSet x1, x2;
        Weight weight;

        auto operator== (const Witness &) const -> bool = default;
    };

    /// One witness per tuple, sorted by tuple.
    class Table
    {
        public:
            using value_type = std::pair<TupleKey, Witness>;

        private:
            std::vector<value_type> _entries;

        public:
            Table() = default;

            /// Keeps the best candidate for each tuple.
            static auto from_candidates(std::vector<value_type> candidates, const VertexWeights & weights) -> Table;

            auto size() const -> std::size_t { return _entries.size(); }
            auto empty() const -> bool { return _entries.empty(); }
            auto begin() const { return _entries.cbegin(); }
            auto end() const { return _entries.cend(); }

            /// The witness for a tuple, or null.
            auto find(const TupleKey & key) const -> const Witness *;

            auto operator== (const Table &) const -> bool = default;
    };

    struct DPOptions
    {
        /// Keep every node's table in the result, for auditing.
        bool keep_tables = false;
        /// Reuse a neutral node's table further up a chain once it stops changing.
        bool neutral_fixpoint = true;
    };

    struct DPStatistics
    {
        long long total_entries = 0;
        long long largest_table = 0;
        long long fixpoint_reuses = 0;
        long long top_condition_rejections = 0;
        std::vector<long long> table_sizes;
    };

    struct DPResult
    {
        std::optional<Solution> best;
        std::vector<State> states;
        std::vector<Table> tables;
        DPStatistics statistics;

        /// The index of an interned state, or -1.
        auto state_index(const State & q) const -> int;
    };

    /**
     * Computes, bottom-up over the host, the best pair fitting every reachable
     * tuple, and at the root the heaviest set whose state is accepting; ties
     * go to the lexicographically larger set. The automaton must accept
     * exactly the graphs with the property and treewidth at most w, and the
     * host must be supernice for its own ell.
     */
    auto solve_dp(const Graph & g, const VertexWeights & weights, const SuperniceDecomposition & host,
            const std::vector<FamilyPtr> & families, const Automaton & a, DPOptions options = DPOptions{},
            const Guards & guards = Guards{}) -> DPResult;

    /// Checks every kept entry against the checkable fitting conditions.
    auto audit_tables(const Graph & g, const VertexWeights & weights, const SuperniceDecomposition & host,
            const std::vector<FamilyPtr> & families, const DPResult & result) -> ValidationReport;
}

#endif
