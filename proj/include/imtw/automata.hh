/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef IMTW_GUARD_AUTOMATA_HH
#define IMTW_GUARD_AUTOMATA_HH 1

#include <imtw/graph.hh>
#include <imtw/tree_decomposition.hh>
#include <imtw/vertex_set.hh>

#include <climits>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace imtw
{
    /// Canonical encoding of an automaton state. Equal encodings mean equal states.
    using State = std::vector<std::uint64_t>;

    struct StateHash
    {
        auto operator() (const State & s) const noexcept -> std::size_t;
    };

    auto state_to_string(const State & s) -> std::string;

    /**
     * A deterministic bottom-up automaton over rooted binary tree
     * decompositions. Transitions see the graph only through the bags they
     * are given, i.e. through the subgraphs induced by those bags.
     *
     * The public transition functions check that every bag they are handed
     * has at most width()+1 vertices and throw WidthError otherwise.
     */
    class Automaton
    {
        private:
            int _width;

        protected:
            virtual auto do_leaf(const Graph & g, VertexSet bag) const -> State = 0;
            virtual auto do_unary(const Graph & g, const State & q, VertexSet child, VertexSet parent) const -> State = 0;
            virtual auto do_binary(const Graph & g, const State & q1, const State & q2,
                    VertexSet left, VertexSet right, VertexSet parent) const -> State = 0;

            auto check_width(VertexSet bag) const -> void;

        public:
            static constexpr int unbounded = INT_MAX;

            explicit Automaton(int width) : _width(width) { }
            virtual ~Automaton() = default;

            Automaton(const Automaton &) = delete;
            Automaton & operator= (const Automaton &) = delete;

            auto width() const -> int { return _width; }

            virtual auto name() const -> std::string = 0;

            auto leaf(const Graph & g, VertexSet bag) const -> State;
            auto unary(const Graph & g, const State & q, VertexSet child, VertexSet parent) const -> State;
            auto binary(const Graph & g, const State & q1, const State & q2,
                    VertexSet left, VertexSet right, VertexSet parent) const -> State;

            virtual auto accepting(const State & q) const -> bool = 0;

            /// An upper bound on the number of distinct states, if one is known independently of the graph.
            virtual auto state_bound() const -> std::optional<long long> { return std::nullopt; }

            /// The same automaton with a different width.
            virtual auto with_width(int width) const -> std::shared_ptr<const Automaton> = 0;
    };

    using AutomatonPtr = std::shared_ptr<const Automaton>;

    /// The state at the root of t, which must be rooted, with at most two children per node.
    auto run(const Automaton & a, const Graph & g, const TreeDecomposition & t) -> State;

    auto accepts(const Automaton & a, const Graph & g, const TreeDecomposition & t) -> bool;

    /// The state on the decomposition with leaf bag nc ∪ {v} below a root bag nc.
    auto neighbourhood_state(const Automaton & a, const Graph & g, int v, VertexSet nc) -> State;

    /// Accepts iff there are no edges.
    auto make_edgeless(int width = Automaton::unbounded) -> AutomatonPtr;

    /// Accepts iff the graph is acyclic.
    auto make_forest(int width = Automaton::unbounded) -> AutomatonPtr;

    /// Accepts iff the graph is nonempty and connected.
    auto make_connected(int width = Automaton::unbounded) -> AutomatonPtr;

    /// Accepts iff every vertex has degree at most d.
    auto make_degree_cap(int d, int width = Automaton::unbounded) -> AutomatonPtr;

    /// Accepts iff every vertex has degree exactly d.
    auto make_degree_exact(int d, int width = Automaton::unbounded) -> AutomatonPtr;

    /// Accepts iff the number of vertices is q modulo r.
    auto make_size_mod(int q, int r, int width = Automaton::unbounded) -> AutomatonPtr;

    /// Accepts everything.
    auto make_true(int width = Automaton::unbounded) -> AutomatonPtr;

    /// Accepts iff every factor accepts.
    auto make_product(std::vector<AutomatonPtr> factors, int width = Automaton::unbounded) -> AutomatonPtr;

    /// "mwis", "forest", "tree", "path", "cycle".
    auto preset_names() -> std::vector<std::string>;

    /// The treewidth bound implied by a preset's property. Throws ContractError for unknown names.
    auto preset_treewidth(const std::string & preset) -> int;

    /**
     * The automaton for a preset, optionally conjoined with extra factors
     * given as "edgeless", "forest", "connected", "true", "degree-cap:D",
     * "degree-exact:D" or "size-mod:Q:R".
     */
    auto make_preset(const std::string & preset, int width = Automaton::unbounded,
            const std::vector<std::string> & extras = {}) -> AutomatonPtr;

    /// A single catalogue automaton from one of the factor names accepted by make_preset.
    auto make_factor(const std::string & spec, int width = Automaton::unbounded) -> AutomatonPtr;
}

#endif
