/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef IMTW_GUARD_INNER_DECOMPOSITION_HH
#define IMTW_GUARD_INNER_DECOMPOSITION_HH 1

#include <imtw/graph.hh>
#include <imtw/guards.hh>
#include <imtw/supernice.hh>
#include <imtw/tree_decomposition.hh>
#include <imtw/vertex_set.hh>

#include <vector>

namespace imtw
{
    /// k(w+1)(5w+6): the width an inner decomposition needs for μ ≤ k and treewidth ≤ w.
    auto ell_bound(int k, int w) -> int;

    /**
     * A split of a solution X. Heavy vertices have degree above 2(w+1) in
     * G[X]; light vertices with a light neighbour go with the heavy ones into
     * x1, and the remaining light vertices form the independent set x2.
     */
    struct SolutionPartition
    {
        VertexSet x1, x2;
        VertexSet heavy, light, light_linked;
    };

    auto partition_solution(const Graph & g, VertexSet x, int w) -> SolutionPartition;

    /**
     * Bags of a decomposition of G[x1 ∪ x2] on the host's tree. The unsmoothed
     * bags are kept alongside for inspection.
     */
    struct InnerDecomposition
    {
        std::vector<VertexSet> ibag;
        std::vector<VertexSet> unsmoothed;
        int ell = 0;

        auto width() const -> int;
        auto as_decomposition(const SuperniceDecomposition & host) const -> TreeDecomposition;
    };

    /// Heavy vertices below t with a light neighbour in bag(t).
    auto out_heavy(const Graph & g, const SuperniceDecomposition & host, const SolutionPartition & part, int t) -> VertexSet;

    /**
     * Builds the inner decomposition for x on an ell-supernice host, where ell
     * is the host's own. Throws ContractError if tw(G[x]) > w, and
     * InternalError if the result fails verify_inner.
     */
    auto build_inner(const Graph & g, const SuperniceDecomposition & host, VertexSet x, int w,
            const Guards & guards = Guards{}) -> std::pair<SolutionPartition, InnerDecomposition>;

    /// All structural conditions on the partition and the inner decomposition.
    auto verify_inner(const Graph & g, const SuperniceDecomposition & host, const SolutionPartition & part,
            const InnerDecomposition & inner, int ell) -> ValidationReport;

    struct ComponentSizes
    {
        int heavy = 0, light_linked = 0, out_heavy = 0;
    };

    auto component_sizes(const Graph & g, const SuperniceDecomposition & host, const SolutionPartition & part, int t) -> ComponentSizes;

    /// k(w+1)², k(w+1)(2w+3) and 2k(w+1)².
    auto component_bounds(int k, int w) -> ComponentSizes;
}

#endif
