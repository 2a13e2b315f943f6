/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef IMTW_GUARD_FORMATS_HH
#define IMTW_GUARD_FORMATS_HH 1

#include <imtw/graph.hh>
#include <imtw/tree_decomposition.hh>
#include <imtw/weights.hh>

#include <istream>
#include <string>

namespace imtw
{
    /**
     * Reads "p tw <n> <m>" followed by m lines "<u> <v>" with 1-indexed
     * endpoints. Lines starting with c, and blank lines, are ignored. Throws
     * ParseError naming the line for anything malformed, out of range or
     * repeated, including an edge given in both directions.
     */
    auto parse_gr(std::istream & in) -> Graph;
    auto parse_gr(const std::string & text) -> Graph;

    /// Canonical text: header, then edges sorted with the smaller endpoint first.
    auto emit_gr(const Graph & g) -> std::string;

    /**
     * Reads "s td <N> <maxbagsize> <n>", N lines "b <i> <v...>" and N-1 lines
     * "<i> <j>" forming a tree. The declared maximum bag size must be the
     * actual one, and n must match the graph's order. The result is unrooted,
     * with its edges oriented from the smaller node and sorted.
     */
    auto parse_td(std::istream & in, int n) -> TreeDecomposition;
    auto parse_td(const std::string & text, int n) -> TreeDecomposition;

    /// Canonical text: bags in node order with sorted vertices, then edges sorted with the smaller node first.
    auto emit_td(const TreeDecomposition & t, int n) -> std::string;

    /// Reads lines "<v> <p>[/<q>]"; unlisted vertices weigh 1. Listing a vertex twice is an error.
    auto parse_weights(std::istream & in, int n) -> VertexWeights;
    auto parse_weights(const std::string & text, int n) -> VertexWeights;

    /// Canonical text: every vertex in order.
    auto emit_weights(const VertexWeights & w) -> std::string;

    /// Reads a whole file, throwing ContractError if it cannot be opened.
    auto read_file(const std::string & path) -> std::string;
}

#endif
