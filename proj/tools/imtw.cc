/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <imtw/automata.hh>
#include <imtw/errors.hh>
#include <imtw/formats.hh>
#include <imtw/oracle.hh>
#include <imtw/pipeline.hh>
#include <imtw/selfcheck.hh>
#include <imtw/supernice.hh>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using std::cerr;
using std::cout;
using std::optional;
using std::string;
using std::vector;

namespace
{
    enum ExitCode
    {
        exit_optimal = 0,
        exit_failed = 1,
        exit_infeasible = 2,
        exit_mu_exceeded = 3,
        exit_usage = 64,
        exit_data = 65,
        exit_resource = 69,
        exit_internal = 70
    };

    struct InstanceArguments
    {
        string graph, weights, td, td_source, problem = "mwis", family_mode = "bounded";
        vector<string> extras;
        optional<int> w, k;
        bool verify = false, statistics = false;
    };

    struct Instance
    {
        imtw::Graph g;
        imtw::VertexWeights weights;
        imtw::TreeDecomposition td;
    };

    auto add_graph_options(CLI::App * app, InstanceArguments & args) -> void
    {
        app->add_option("--graph", args.graph, "graph in .gr format")->required();
        app->add_option("--td", args.td, "tree decomposition in .td format");
        app->add_option("--td-source", args.td_source, "build a decomposition instead: trivial or search")
            ->check(CLI::IsMember({ "trivial", "search" }))->excludes("--td");
    }

    auto add_instance_options(CLI::App * app, InstanceArguments & args) -> void
    {
        add_graph_options(app, args);
        app->add_option("--weights", args.weights, "vertex weights; unlisted vertices weigh 1");
        app->add_option("--problem", args.problem, "mwis, forest, tree, path or cycle")
            ->check(CLI::IsMember(imtw::preset_names()));
        app->add_option("--extra", args.extras, "extra factor: edgeless, forest, connected, true, "
                "degree-cap:D, degree-exact:D or size-mod:Q:R");
        app->add_option("--w", args.w, "treewidth bound, at least the problem's own");
        app->add_option("--k", args.k, "declared bound on the decomposition's mu-width");
        app->add_option("--family-mode", args.family_mode, "bounded or all")->check(CLI::IsMember({ "bounded", "all" }));
        app->add_flag("--verify", args.verify, "also compare with the brute-force oracle when the graph is small");
        app->add_flag("--stats", args.statistics, "print statistics as comment lines");
    }

    auto load_graph(const InstanceArguments & args) -> Instance
    {
        Instance inst;
        inst.g = imtw::parse_gr(imtw::read_file(args.graph));
        inst.weights = args.weights.empty() ? imtw::VertexWeights(inst.g.capacity())
            : imtw::parse_weights(imtw::read_file(args.weights), inst.g.capacity());
        if (! args.td.empty())
            inst.td = imtw::acquire_decomposition(inst.g, imtw::DecompositionSource::file,
                    imtw::parse_td(imtw::read_file(args.td), inst.g.capacity()));
        else
            inst.td = imtw::acquire_decomposition(inst.g, imtw::parse_decomposition_source(
                        args.td_source.empty() ? "search" : args.td_source));
        return inst;
    }

    auto print_solution(const imtw::Solution & s) -> void
    {
        cout << "weight " << imtw::weight_to_fraction_string(s.weight) << "\n";
        cout << "solution";
        for (int v : s.vertices)
            cout << " " << v + 1;
        cout << "\n";
    }

    auto solve_command(const InstanceArguments & args) -> int
    {
        auto inst = load_graph(args);
        imtw::SolveOptions options;
        options.preset = args.problem;
        options.extras = args.extras;
        options.w = args.w;
        options.k = args.k;
        options.family_mode = imtw::parse_family_mode(args.family_mode);
        auto report = imtw::solve_pipeline(inst.g, inst.weights, inst.td, options);

        cout << "status " << imtw::solve_status_name(report.status) << "\n";
        if (report.status == imtw::SolveStatus::mu_exceeded)
            cout << "mu " << report.mu << "\n";
        if (report.solution)
            print_solution(*report.solution);
        if (args.statistics)
            for (auto & line : report.statistics_lines())
                cout << "c " << line << "\n";

        if (args.verify && report.status != imtw::SolveStatus::mu_exceeded) {
            if (inst.g.order() > imtw::Guards{}.max_oracle_n)
                cout << "c verify skipped: graph too large for the oracle\n";
            else {
                auto spec = imtw::problem_spec(args.problem, args.extras);
                if (args.w)
                    spec.w = *args.w;
                auto expected = imtw::brute_force_optimal(inst.g, inst.weights, spec);
                bool agree = expected.has_value() == report.solution.has_value()
                    && (! expected || expected->weight == report.solution->weight);
                cout << "c verify " << (agree ? "agrees" : "DISAGREES") << " with the oracle\n";
                if (! agree)
                    return exit_internal;
            }
        }

        switch (report.status) {
            case imtw::SolveStatus::optimal: return exit_optimal;
            case imtw::SolveStatus::infeasible: return exit_infeasible;
            case imtw::SolveStatus::mu_exceeded: return exit_mu_exceeded;
        }
        return exit_internal;
    }

    auto oracle_command(const InstanceArguments & args) -> int
    {
        auto g = imtw::parse_gr(imtw::read_file(args.graph));
        auto weights = args.weights.empty() ? imtw::VertexWeights(g.capacity())
            : imtw::parse_weights(imtw::read_file(args.weights), g.capacity());
        auto spec = imtw::problem_spec(args.problem, args.extras);
        if (args.w) {
            if (*args.w < spec.w)
                throw imtw::ContractError("--w is below the bound implied by " + args.problem);
            spec.w = *args.w;
        }
        auto best = imtw::brute_force_optimal(g, weights, spec);
        cout << "status " << (best ? "optimal" : "infeasible") << "\n";
        if (best)
            print_solution(*best);
        return best ? exit_optimal : exit_infeasible;
    }

    auto validate_command(const InstanceArguments & args) -> int
    {
        auto g = imtw::parse_gr(imtw::read_file(args.graph));
        auto td = imtw::parse_td(imtw::read_file(args.td), g.capacity());
        auto report = imtw::validate(g, td);
        if (report.ok()) {
            cout << "valid width " << imtw::width(td) << "\n";
            return exit_optimal;
        }
        cout << "invalid\n" << report.to_string();
        return exit_failed;
    }

    auto normalize_command(const InstanceArguments & args, int ell) -> int
    {
        auto inst = load_graph(args);
        auto d = imtw::make_supernice(inst.g, inst.td, ell);
        cout << "c root " << d.root() + 1 << "\n";
        cout << imtw::emit_td(d.decomposition(), inst.g.capacity());
        return exit_optimal;
    }

    auto mu_width_command(const InstanceArguments & args) -> int
    {
        auto inst = load_graph(args);
        cout << "mu " << imtw::mu_width(inst.g, inst.td) << "\n";
        cout << "width " << imtw::width(inst.td) << "\n";
        return exit_optimal;
    }

    auto selfcheck_command(const imtw::SelfcheckOptions & options) -> int
    {
        cout << "c seed " << options.seed << " budget " << options.budget << "\n";
        auto results = imtw::selfcheck(options);
        cout << imtw::selfcheck_summary(results);
        for (auto & r : results)
            if (r.failed)
                return exit_failed;
        return exit_optimal;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Maximum-weight induced subgraphs of bounded treewidth" };
    app.require_subcommand(1);

    InstanceArguments solve_args, oracle_args, validate_args, normalize_args, mu_args;
    int ell = 0;
    imtw::SelfcheckOptions selfcheck_options;

    auto solve = app.add_subcommand("solve", "solve an instance exactly");
    add_instance_options(solve, solve_args);

    auto oracle = app.add_subcommand("oracle", "solve an instance by exhaustive search");
    add_instance_options(oracle, oracle_args);

    auto validate = app.add_subcommand("validate-td", "check a tree decomposition");
    validate->add_option("--graph", validate_args.graph, "graph in .gr format")->required();
    validate->add_option("--td", validate_args.td, "tree decomposition in .td format")->required();

    auto normalize = app.add_subcommand("normalize", "print the supernice form of a decomposition");
    add_graph_options(normalize, normalize_args);
    normalize->add_option("--ell", ell, "neutral chain parameter")->required()->check(CLI::NonNegativeNumber);

    auto mu = app.add_subcommand("mu-width", "print the mu-width and width of a decomposition");
    add_graph_options(mu, mu_args);

    auto check = app.add_subcommand("selfcheck", "run the randomized cross-checks");
    check->add_option("--seed", selfcheck_options.seed, "random seed");
    check->add_option("--budget", selfcheck_options.budget, "instances per suite")->check(CLI::NonNegativeNumber);
    check->add_option("--max-n", selfcheck_options.max_n, "largest instance order")->check(CLI::Range(0, 12));
    check->add_flag("--inject-fault", selfcheck_options.inject_fault, "perturb solver results to exercise failure reporting");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_optimal : exit_usage;
    }

    try {
        if (solve->parsed())
            return solve_command(solve_args);
        if (oracle->parsed())
            return oracle_command(oracle_args);
        if (validate->parsed())
            return validate_command(validate_args);
        if (normalize->parsed())
            return normalize_command(normalize_args, ell);
        if (mu->parsed())
            return mu_width_command(mu_args);
        if (check->parsed())
            return selfcheck_command(selfcheck_options);
    }
    catch (const imtw::ParseError & e) {
        cerr << "parse error: " << e.what() << "\n";
        return exit_data;
    }
    catch (const imtw::StructureError & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_data;
    }
    catch (const imtw::ContractError & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const imtw::ResourceError & e) {
        cerr << "resource limit: " << e.what() << "\n";
        return exit_resource;
    }
    catch (const std::exception & e) {
        cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_usage;
}
