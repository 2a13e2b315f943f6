/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <imtw/errors.hh>
#include <imtw/graph_algorithms.hh>
#include <imtw/inner_decomposition.hh>
#include <imtw/pipeline.hh>
#include <imtw/supernice.hh>

#include <algorithm>
#include <chrono>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace imtw
{
    auto decomposition_source_name(DecompositionSource s) -> string
    {
        switch (s) {
            case DecompositionSource::file: return "file";
            case DecompositionSource::trivial: return "trivial";
            case DecompositionSource::search: return "search";
        }
        throw InternalError("bad decomposition source");
    }

    auto parse_decomposition_source(const string & s) -> DecompositionSource
    {
        for (auto d : { DecompositionSource::file, DecompositionSource::trivial, DecompositionSource::search })
            if (decomposition_source_name(d) == s)
                return d;
        throw ContractError("unknown decomposition source '" + s + "'");
    }

    auto acquire_decomposition(const Graph & g, DecompositionSource source,
            const optional<TreeDecomposition> & given, const Guards & guards) -> TreeDecomposition
    {
        TreeDecomposition result;
        switch (source) {
            case DecompositionSource::file:
                if (! given)
                    throw ContractError("no decomposition was given");
                result = *given;
                break;
            case DecompositionSource::trivial:
                result = trivial_decomposition(g);
                break;
            case DecompositionSource::search:
                result = mu_width_search_decomposition(g, guards);
                break;
        }

        auto report = validate(g, result);
        if (! report.ok())
            throw StructureError("invalid tree decomposition:\n" + report.to_string());
        return result;
    }

    auto solve_status_name(SolveStatus s) -> string
    {
        switch (s) {
            case SolveStatus::optimal: return "optimal";
            case SolveStatus::infeasible: return "infeasible";
            case SolveStatus::mu_exceeded: return "mu-exceeded";
        }
        throw InternalError("bad solve status");
    }

    auto SolveReport::statistics_lines() const -> vector<string>
    {
        return {
            "w " + to_string(w),
            "mu " + to_string(mu),
            "ell " + to_string(ell),
            "family_mode " + family_mode_name(family_mode),
            "host_nodes " + to_string(host_nodes),
            "largest_family " + to_string(largest_family),
            "total_family " + to_string(total_family),
            "largest_table " + to_string(dp.largest_table),
            "total_entries " + to_string(dp.total_entries),
            "fixpoint_reuses " + to_string(dp.fixpoint_reuses),
            "seconds " + to_string(seconds)
        };
    }

    auto bag_families(const Graph & g, const VertexWeights & weights, const TreeDecomposition & td,
            int w, const AutomatonPtr & a, FamilyMode mode, const Guards & guards) -> vector<Family>
    {
        FamilyOptions family_options;
        family_options.mode = mode;
        FamilyEnumerator enumerator(g, weights, w, a, family_options, guards);
        vector<Family> result;
        for (auto & bag : td.bags)
            result.push_back(enumerator.family(bag, mu_of_set(g, bag, guards)));
        return result;
    }

    auto solve_pipeline(const Graph & g, const VertexWeights & weights, const TreeDecomposition & td,
            const SolveOptions & options) -> SolveReport
    {
        auto start = std::chrono::steady_clock::now();

        auto spec = problem_spec(options.preset, options.extras);
        if (options.w) {
            if (*options.w < spec.w)
                throw ContractError("w = " + to_string(*options.w) + " is below the bound " + to_string(spec.w)
                        + " implied by " + options.preset);
            spec.w = *options.w;
        }
        if (options.k && *options.k < 0)
            throw ContractError("k must be nonnegative");
        if (weights.size() != g.capacity())
            throw ContractError("need exactly one weight per vertex");

        auto report_check = validate(g, td);
        if (! report_check.ok())
            throw StructureError("invalid tree decomposition:\n" + report_check.to_string());

        SolveReport report;
        report.w = spec.w;
        report.mu = mu_width(g, td, options.guards);
        if (options.k && report.mu > *options.k) {
            report.status = SolveStatus::mu_exceeded;
            report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return report;
        }

        report.ell = ell_bound(report.mu, spec.w);
        auto checking_automaton = make_preset(options.preset, Automaton::unbounded, options.extras);
        auto automaton = make_preset(options.preset, report.ell, options.extras);

        auto host = make_supernice(g, td, report.ell);
        report.host_nodes = host.node_count();

        vector<FamilyPtr> families;
        if (options.restrict_families) {
            FamilyOptions family_options;
            family_options.mode = options.family_mode;
            FamilyEnumerator enumerator(g, weights, spec.w, checking_automaton, family_options, options.guards);
            report.family_mode = enumerator.mode();
            vector<Family> per_bag;
            for (auto & bag : td.bags) {
                per_bag.push_back(enumerator.family(bag, mu_of_set(g, bag, options.guards)));
                report.largest_family = std::max<long long>(report.largest_family, per_bag.back().size());
                report.total_family += per_bag.back().size();
            }
            families = propagate_families(host, td, per_bag);
        }
        else {
            report.family_mode = FamilyMode::all;
            families = unrestricted_families(host);
        }

        auto result = solve_dp(g, weights, host, families, *automaton, options.dp, options.guards);
        report.dp = std::move(result.statistics);
        report.solution = result.best;
        report.status = result.best ? SolveStatus::optimal : SolveStatus::infeasible;

        if (report.solution && options.verify) {
            report.verification = feasibility_check(g, weights, spec, report.solution->vertices, options.guards);
            if (! report.verification->ok() || report.verification->weight != report.solution->weight)
                throw InternalError("returned set " + report.solution->vertices.to_string() + " fails verification: "
                        + (report.verification->ok() ? string("weight mismatch") : report.verification->reason));
        }

        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }
}
