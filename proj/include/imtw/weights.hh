/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef IMTW_GUARD_WEIGHTS_HH
#define IMTW_GUARD_WEIGHTS_HH 1

#include <imtw/vertex_set.hh>

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace imtw
{
    using Weight = boost::rational<std::int64_t>;

    /// "p/q", or just "p" when q is 1.
    auto weight_to_string(const Weight & w) -> std::string;

    /// Always "p/q", as used on solver output lines.
    auto weight_to_fraction_string(const Weight & w) -> std::string;

    /// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
    auto parse_weight(const std::string & s) -> Weight;

    /**
     * Vertex weights together with the total vertex order used for tie-breaking.
     * The order is stored as a rank per vertex; the default is ascending id.
     */
    class VertexWeights
    {
        private:
            std::vector<Weight> _weights;
            std::vector<int> _rank;

        public:
            VertexWeights() = default;

            /// Unit weights, default order.
            explicit VertexWeights(int n);
            explicit VertexWeights(std::vector<Weight> weights);

            auto size() const -> int { return int(_weights.size()); }
            auto weight(int v) const -> const Weight & { return _weights.at(v); }
            auto set_weight(int v, Weight w) -> void { _weights.at(v) = w; }
            auto weights() const -> const std::vector<Weight> & { return _weights; }

            auto total(VertexSet x) const -> Weight;

            /// Vertices listed in increasing order; must be a permutation of 0..n-1.
            auto set_order(const std::vector<int> & increasing) -> void;
            auto rank(int v) const -> int { return _rank.at(v); }
            auto has_default_order() const -> bool;

            /// u <_V v
            auto precedes(int u, int v) const -> bool { return _rank[u] < _rank[v]; }

            /// Elements of x, ascending under the vertex order.
            auto sorted(VertexSet x) const -> std::vector<int>;

            /// Elements of x, ascending by (weight, vertex order).
            auto sorted_by_weight(VertexSet x) const -> std::vector<int>;

            /// Larger cardinality, else larger element at the first differing ascending position.
            auto lex_larger(VertexSet a, VertexSet b) const -> bool;

            /// Heavier, or equally heavy and lex_larger.
            auto better(VertexSet a, const Weight & wa, VertexSet b, const Weight & wb) const -> bool;

            auto operator== (const VertexWeights &) const -> bool = default;
    };

    /// lex_larger under the default ascending-id order.
    auto lex_larger(VertexSet a, VertexSet b) -> bool;
}

#endif
