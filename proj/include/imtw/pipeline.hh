/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef IMTW_GUARD_PIPELINE_HH
#define IMTW_GUARD_PIPELINE_HH 1

#include <imtw/dp_engine.hh>
#include <imtw/graph.hh>
#include <imtw/guards.hh>
#include <imtw/oracle.hh>
#include <imtw/signatures.hh>
#include <imtw/tree_decomposition.hh>
#include <imtw/weights.hh>

#include <optional>
#include <string>
#include <vector>

namespace imtw
{
    enum class DecompositionSource
    {
        file,
        trivial,
        search
    };

    /// "file", "trivial", "search".
    auto decomposition_source_name(DecompositionSource s) -> std::string;

    /// Throws ContractError for anything else.
    auto parse_decomposition_source(const std::string & s) -> DecompositionSource;

    /// A decomposition built as requested; for file, the given one is validated and returned.
    auto acquire_decomposition(const Graph & g, DecompositionSource source,
            const std::optional<TreeDecomposition> & given = std::nullopt, const Guards & guards = Guards{}) -> TreeDecomposition;

    struct SolveOptions
    {
        std::string preset = "mwis";
        std::vector<std::string> extras;
        /// Treewidth bound; defaults to the preset's, and may not be below it.
        std::optional<int> w;
        /// Declared bound on the decomposition's μ-width.
        std::optional<int> k;
        FamilyMode family_mode = FamilyMode::bounded;
        /// When false, every subset of every bag is a candidate.
        bool restrict_families = true;
        /// Check the returned set independently of the dynamic program.
        bool verify = true;
        DPOptions dp;
        Guards guards;
    };

    enum class SolveStatus
    {
        optimal,
        infeasible,
        mu_exceeded
    };

    /// "optimal", "infeasible", "mu-exceeded".
    auto solve_status_name(SolveStatus s) -> std::string;

    struct SolveReport
    {
        SolveStatus status = SolveStatus::infeasible;
        std::optional<Solution> solution;
        int w = 0;
        int mu = 0;
        int ell = 0;
        FamilyMode family_mode = FamilyMode::bounded;
        long long host_nodes = 0;
        long long largest_family = 0;
        long long total_family = 0;
        DPStatistics dp;
        std::optional<FeasibilityReport> verification;
        double seconds = 0.0;

        /// Human-readable statistics, one "key value" pair per line.
        auto statistics_lines() const -> std::vector<std::string>;
    };

    /**
     * Solves the instance over the given decomposition, which must be valid
     * for g. Throws StructureError for an invalid decomposition, ContractError
     * for bad options, ResourceError when a guard trips, and InternalError if
     * the returned set fails verification.
     */
    auto solve_pipeline(const Graph & g, const VertexWeights & weights, const TreeDecomposition & td,
            const SolveOptions & options) -> SolveReport;

    /// The per-bag candidate families for td, one per bag.
    auto bag_families(const Graph & g, const VertexWeights & weights, const TreeDecomposition & td,
            int w, const AutomatonPtr & a, FamilyMode mode, const Guards & guards = Guards{}) -> std::vector<Family>;
}

#endif
