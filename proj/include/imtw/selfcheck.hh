/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef IMTW_GUARD_SELFCHECK_HH
#define IMTW_GUARD_SELFCHECK_HH 1

#include <cstdint>
#include <string>
#include <vector>

namespace imtw
{
    struct SelfcheckOptions
    {
        std::uint64_t seed = 1;
        /// Instances per suite.
        int budget = 20;
        /// Largest instance order.
        int max_n = 8;
        /// Perturbs the solver's reported weight, so that the oracle suite must fail.
        bool inject_fault = false;
    };

    struct SuiteResult
    {
        std::string name;
        long long passed = 0, failed = 0;
        /// The first failing instance, as comment lines followed by .gr, .td and weight sections.
        std::string first_failure;
    };

    /// Oracle equivalence, automaton agreement, family completeness and inner decomposition verification.
    auto selfcheck(const SelfcheckOptions & options) -> std::vector<SuiteResult>;

    /// "suite <name> passed <p> failed <f>" lines, each followed by the first failure if any.
    auto selfcheck_summary(const std::vector<SuiteResult> & results) -> std::string;
}

#endif
