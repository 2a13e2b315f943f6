/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <imtw/automata.hh>
#include <imtw/formats.hh>
#include <imtw/graph_algorithms.hh>
#include <imtw/inner_decomposition.hh>
#include <imtw/oracle.hh>
#include <imtw/pipeline.hh>
#include <imtw/random_instances.hh>
#include <imtw/selfcheck.hh>
#include <imtw/signatures.hh>
#include <imtw/supernice.hh>

#include <exception>
#include <functional>
#include <sstream>

using std::function;
using std::string;
using std::to_string;
using std::vector;

namespace imtw
{
    namespace
    {
        struct Instance
        {
            Graph g;
            VertexWeights weights;
            TreeDecomposition td;
            string preset;
        };

        auto random_instance(Random & rng, int max_n, int index, bool binary) -> Instance
        {
            auto g = random_graph(rng, uniform_int(rng, 0, max_n), 0.2 * (1 + index % 3));
            auto weights = random_weights(rng, g.capacity(), -5, 5, 4);
            auto td = binary ? random_binary_decomposition(rng, g) : random_decomposition(rng, g);
            auto presets = preset_names();
            return Instance{ std::move(g), std::move(weights), std::move(td), presets[index % presets.size()] };
        }

        auto dump(const string & suite, const SelfcheckOptions & options, int index, const Instance & inst,
                const string & what) -> string
        {
            std::ostringstream out;
            out << "c suite " << suite << " seed " << options.seed << " instance " << index << " preset " << inst.preset << "\n";
            out << "c " << what << "\n";
            out << "c graph\n" << emit_gr(inst.g);
            out << "c decomposition\n" << emit_td(inst.td, inst.g.capacity());
            out << "c weights\n" << emit_weights(inst.weights);
            return out.str();
        }

        /// Runs check on budget instances; check returns an empty string on success.
        auto run_suite(const string & name, const SelfcheckOptions & options, std::uint64_t salt, bool binary,
                const function<auto (const Instance &) -> string> & check) -> SuiteResult
        {
            SuiteResult result{ name, 0, 0, "" };
            Random rng(options.seed * 0x9e3779b97f4a7c15ULL + salt);
            for (int i = 0 ; i < options.budget ; ++i) {
                auto inst = random_instance(rng, options.max_n, i, binary);
                string problem;
                try {
                    problem = check(inst);
                }
                catch (const std::exception & e) {
                    problem = string("exception: ") + e.what();
                }
                if (problem.empty())
                    ++result.passed;
                else {
                    if (0 == result.failed)
                        result.first_failure = dump(name, options, i, inst, problem);
                    ++result.failed;
                }
            }
            return result;
        }
    }

    auto selfcheck(const SelfcheckOptions & options) -> vector<SuiteResult>
    {
        vector<SuiteResult> results;

        results.push_back(run_suite("oracle", options, 1, false, [&] (const Instance & inst) -> string {
            auto expected = brute_force_optimal(inst.g, inst.weights, problem_spec(inst.preset));
            SolveOptions solve_options;
            solve_options.preset = inst.preset;
            auto report = solve_pipeline(inst.g, inst.weights, inst.td, solve_options);
            if (report.solution && options.inject_fault)
                report.solution->weight += Weight{ 1 };
            if (report.solution.has_value() != expected.has_value())
                return "solver and oracle disagree on feasibility";
            if (expected && ! (report.solution->weight == expected->weight))
                return "solver weight " + weight_to_string(report.solution->weight) + " but oracle weight "
                    + weight_to_string(expected->weight);
            return "";
        }));

        results.push_back(run_suite("automata", options, 2, true, [&] (const Instance & inst) -> string {
            for (auto & name : preset_names())
                if (accepts(*make_preset(name), inst.g, inst.td) != problem_spec(name).checker()(inst.g, inst.g.vertices()))
                    return "preset " + name + " disagrees with its checker";
            for (string name : { "edgeless", "forest", "connected", "true", "degree-cap:1", "degree-exact:1", "size-mod:1:2" })
                if (accepts(*make_factor(name), inst.g, inst.td) != factor_checker(name)(inst.g, inst.g.vertices()))
                    return "factor " + name + " disagrees with its checker";
            return "";
        }));

        results.push_back(run_suite("families", options, 3, false, [&] (const Instance & inst) -> string {
            auto spec = problem_spec(inst.preset);
            auto best = brute_force_optimal(inst.g, inst.weights, spec);
            if (! best)
                return "";
            for (auto mode : { FamilyMode::bounded, FamilyMode::all }) {
                FamilyOptions family_options;
                family_options.mode = mode;
                FamilyEnumerator enumerator(inst.g, inst.weights, spec.w, make_preset(inst.preset), family_options);
                for (auto & b : inst.td.bags) {
                    auto family = enumerator.family(b, mu_of_set(inst.g, b));
                    if (! std::binary_search(family.begin(), family.end(), best->vertices & b))
                        return "trace " + (best->vertices & b).to_string() + " missing from the " + family_mode_name(mode)
                            + " family of bag " + b.to_string();
                }
            }
            return "";
        }));

        results.push_back(run_suite("inner", options, 4, false, [&] (const Instance & inst) -> string {
            auto spec = problem_spec(inst.preset);
            auto best = brute_force_optimal(inst.g, inst.weights, spec);
            if (! best)
                return "";
            int ell = ell_bound(mu_width(inst.g, inst.td), spec.w);
            auto host = make_supernice(inst.g, inst.td, ell);
            auto [part, inner] = build_inner(inst.g, host, best->vertices, spec.w);
            auto report = verify_inner(inst.g, host, part, inner, ell);
            if (! report.ok())
                return report.to_string();
            if (inner.width() > ell)
                return "inner width " + to_string(inner.width()) + " exceeds " + to_string(ell);
            return "";
        }));

        return results;
    }

    auto selfcheck_summary(const vector<SuiteResult> & results) -> string
    {
        std::ostringstream out;
        for (auto & r : results) {
            out << "suite " << r.name << " passed " << r.passed << " failed " << r.failed << "\n";
            if (r.failed)
                out << r.first_failure;
        }
        return out.str();
    }
}
