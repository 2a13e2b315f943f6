/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef IMTW_GUARD_RANDOM_INSTANCES_HH
#define IMTW_GUARD_RANDOM_INSTANCES_HH 1

#include <imtw/graph.hh>
#include <imtw/tree_decomposition.hh>
#include <imtw/weights.hh>

#include <random>

namespace imtw
{
    using Random = std::mt19937_64;

    /// Erdős–Rényi G(n, p).
    auto random_graph(Random & rng, int n, double p) -> Graph;

    /// Weights p/q with q in 1..max_denominator and p/q in [low, high].
    auto random_weights(Random & rng, int n, int low = -5, int high = 5, int max_denominator = 4) -> VertexWeights;

    /// A valid decomposition: from a random elimination ordering, then randomly padded with
    /// subdivisions and extra leaves whose bags are subsets of their neighbour's.
    auto random_decomposition(Random & rng, const Graph & g) -> TreeDecomposition;

    /// A random decomposition rooted at a random node, with nodes of more than two children split.
    auto random_binary_decomposition(Random & rng, const Graph & g) -> TreeDecomposition;

    /// Greedy maximal matching over a shuffled edge list.
    auto random_maximal_matching(Random & rng, const Graph & g) -> Matching;

    /// Uniform integer in [low, high].
    auto uniform_int(Random & rng, int low, int high) -> int;
}

#endif
