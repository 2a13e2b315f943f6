/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef IMTW_GUARD_TREE_DECOMPOSITION_HH
#define IMTW_GUARD_TREE_DECOMPOSITION_HH 1

#include <imtw/graph.hh>
#include <imtw/guards.hh>
#include <imtw/vertex_set.hh>

#include <string>
#include <utility>
#include <vector>

namespace imtw
{
    /**
     * Nodes are 0..node_count()-1. The tree is given by its edge list; root is
     * -1 for an unrooted decomposition.
     */
    struct TreeDecomposition
    {
        std::vector<VertexSet> bags;
        std::vector<std::pair<int, int>> edges;
        int root = -1;

        auto node_count() const -> int { return int(bags.size()); }
        auto add_node(VertexSet bag) -> int;
        auto add_edge(int s, int t) -> void;

        /// Neighbour lists, each sorted.
        auto adjacency() const -> std::vector<std::vector<int>>;

        auto operator== (const TreeDecomposition &) const -> bool = default;
    };

    enum class ViolationKind
    {
        not_a_tree,
        bag_outside_graph,
        missing_vertex,
        uncovered_edge,
        disconnected_vertex,
        structure
    };

    auto violation_kind_name(ViolationKind k) -> std::string;

    struct Violation
    {
        ViolationKind kind;
        std::string message;
        std::vector<int> witness;
    };

    /// A list of violated conditions. Empty means everything checked holds.
    struct ValidationReport
    {
        std::vector<Violation> violations;

        auto ok() const -> bool { return violations.empty(); }
        auto add(ViolationKind kind, std::string message, std::vector<int> witness = {}) -> void;
        auto count(ViolationKind kind) const -> int;
        auto append(const ValidationReport & other) -> void;

        /// One line per violation, "<kind>: <message>".
        auto to_string() const -> std::string;
    };

    auto validate(const Graph & g, const TreeDecomposition & t) -> ValidationReport;

    /// max |bag| - 1; -1 when every bag is empty. Throws StructureError if there are no nodes.
    auto width(const TreeDecomposition & t) -> int;

    auto mu_width(const Graph & g, const TreeDecomposition & t, const Guards & guards = Guards{}) -> int;

    /// Parent pointers, children lists and a postorder, for a decomposition with a root.
    struct RootedTree
    {
        int root = -1;
        std::vector<int> parent;
        std::vector<std::vector<int>> children;
        std::vector<int> postorder;
    };

    /// Throws StructureError if t has no root or its edges do not form a tree.
    auto root_tree(const TreeDecomposition & t) -> RootedTree;

    /// The decomposition obtained from eliminating vertices in the given order.
    auto decomposition_from_ordering(const Graph & g, const std::vector<int> & ordering) -> TreeDecomposition;

    /// A decomposition of width exactly treewidth_exact(g).
    auto optimal_width_decomposition(const Graph & g, const Guards & guards = Guards{}) -> TreeDecomposition;

    auto trivial_decomposition(const Graph & g) -> TreeDecomposition;

    /**
     * Minimises mu-width over all decompositions arising from elimination
     * orderings, breaking ties by width.
     */
    auto mu_width_search_decomposition(const Graph & g, const Guards & guards = Guards{}) -> TreeDecomposition;
}

#endif
