/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef IMTW_GUARD_SUPERNICE_HH
#define IMTW_GUARD_SUPERNICE_HH 1

#include <imtw/graph.hh>
#include <imtw/tree_decomposition.hh>
#include <imtw/vertex_set.hh>

#include <string>
#include <vector>

namespace imtw
{
    enum class NodeKind
    {
        initial,
        introduce,
        forget,
        join,
        neutral,
        top
    };

    struct NodeLabel
    {
        NodeKind kind = NodeKind::neutral;
        int vertex = -1;

        auto operator== (const NodeLabel &) const -> bool = default;
    };

    /// "initial", "introduce(3)", ...
    auto node_label_name(const NodeLabel & l) -> std::string;

    /**
     * Labels every node of a rooted decomposition. A leaf must have an empty
     * bag; a one-child node must add, drop or keep exactly one vertex; a
     * two-child node must have both children's bags equal to its own. Throws
     * StructureError naming the first offending node otherwise.
     */
    auto classify_nodes(const TreeDecomposition & rooted) -> std::vector<NodeLabel>;

    /**
     * A rooted binary decomposition with its node labels and the derived
     * per-node data the later stages query repeatedly.
     */
    class SuperniceDecomposition
    {
        private:
            TreeDecomposition _td;
            RootedTree _tree;
            std::vector<NodeLabel> _labels;
            std::vector<VertexSet> _subtree;
            std::vector<int> _top;
            int _ell = 0;

        public:
            SuperniceDecomposition() = default;

            /// Classifies the nodes of a rooted decomposition. Throws StructureError if it is not nice.
            SuperniceDecomposition(TreeDecomposition rooted, int ell);

            auto decomposition() const -> const TreeDecomposition & { return _td; }
            auto node_count() const -> int { return _td.node_count(); }
            auto root() const -> int { return _tree.root; }
            auto ell() const -> int { return _ell; }

            auto bag(int t) const -> VertexSet { return _td.bags[t]; }
            auto parent(int t) const -> int { return _tree.parent[t]; }
            auto children(int t) const -> const std::vector<int> & { return _tree.children[t]; }
            auto postorder() const -> const std::vector<int> & { return _tree.postorder; }
            auto label(int t) const -> const NodeLabel & { return _labels[t]; }
            auto labels() const -> const std::vector<NodeLabel> & { return _labels; }

            /// Union of the bags of t and its descendants.
            auto subtree(int t) const -> VertexSet { return _subtree[t]; }

            /// The node containing v that is closest to the root, or -1 if v is in no bag.
            auto top(int v) const -> int;

            /// The vertices whose top node is t (at most one).
            auto topv(int t) const -> VertexSet;

            auto is_ancestor_or_self(int a, int t) const -> bool;
    };

    /**
     * Checks the shape requirements beyond node classification: the root bag
     * is empty, each vertex's top node is labelled top for it, and above each
     * introduce, forget or join node the next ell+1 ancestors are neutral.
     */
    auto check_supernice(const SuperniceDecomposition & d, int ell) -> ValidationReport;

    /**
     * An ell-supernice decomposition whose bags are all subsets of bags of t
     * and which contains every bag of t verbatim. Deterministic.
     */
    auto make_supernice(const Graph & g, const TreeDecomposition & t, int ell) -> SuperniceDecomposition;

    /// The constant c in the node count bound c * (|V(T)| + n + ell)^3 that make_supernice meets.
    constexpr long long supernice_size_constant = 32;
}

#endif
