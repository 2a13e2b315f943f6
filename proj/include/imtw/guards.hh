/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef IMTW_GUARD_GUARDS_HH
#define IMTW_GUARD_GUARDS_HH 1

namespace imtw
{
    /**
     * Limits for the exhaustive routines. Anything that would exceed one of
     * these throws ResourceError rather than running for an unbounded time.
     */
    struct Guards
    {
        /// Largest vertex count for subset dynamic programs (treewidth, decomposition search).
        int max_exponential_n = 20;

        /// Largest vertex count accepted by the brute-force oracle.
        int max_oracle_n = 14;

        /// Largest number of maximal independent sets listed before giving up.
        long long max_independent_sets = 200000;

        /// Largest number of edges considered by matching enumeration.
        int max_matching_edges = 64;

        /// Largest number of candidate sets in one bag family.
        long long max_family_size = 2000000;

        /// Largest number of entries in one dynamic programming table.
        long long max_table_size = 20000000;
    };
}

#endif
