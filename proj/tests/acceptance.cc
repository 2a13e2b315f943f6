/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <imtw/automata.hh>
#include <imtw/formats.hh>
#include <imtw/graph_algorithms.hh>
#include <imtw/inner_decomposition.hh>
#include <imtw/oracle.hh>
#include <imtw/pipeline.hh>
#include <imtw/random_instances.hh>
#include <imtw/signatures.hh>
#include <imtw/supernice.hh>

#include <algorithm>
#include <chrono>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace imtw;

using std::cout;
using std::string;
using std::to_string;
using std::vector;

namespace fs = std::filesystem;

namespace
{
    struct Instance
    {
        Graph g;
        VertexWeights weights;
        TreeDecomposition td;
        string preset;
        std::optional<Solution> best;
    };

    /// Counts checks, remembering the first failure.
    struct Tally
    {
        long long checks = 0, failures = 0;
        string first;

        auto expect(bool ok, const std::function<auto () -> string> & describe) -> void
        {
            ++checks;
            if (! ok) {
                if (0 == failures)
                    first = describe();
                ++failures;
            }
        }
    };

    auto report(int number, const string & name, const Tally & tally, const string & detail) -> bool
    {
        bool pass = 0 == tally.failures && tally.checks > 0;
        cout << "criterion " << number << " " << name << ": " << (pass ? "PASS" : "FAIL") << " (" << detail
            << ", " << tally.checks << " checks, " << tally.failures << " failures";
        if (! pass && ! tally.first.empty())
            cout << "; first: " << tally.first;
        cout << ")" << std::endl;
        return pass;
    }

    auto guarded(Tally & tally, const std::function<auto () -> void> & f, const std::function<auto () -> string> & where) -> void
    {
        try {
            f();
        }
        catch (const std::exception & e) {
            tally.expect(false, [&] { return where() + ": exception " + e.what(); });
        }
    }

    auto describe(const Instance & inst) -> string
    {
        std::ostringstream out;
        out << inst.preset << " on " << emit_gr(inst.g);
        auto text = out.str();
        std::replace(text.begin(), text.end(), '\n', ' ');
        return text;
    }

    constexpr int per_preset = 200;

    /// Criterion 1, keeping the instances for the criteria that reuse them.
    auto oracle_equivalence(vector<Instance> & instances) -> bool
    {
        Tally tally;
        Random rng(1001);
        long long same_set = 0, feasible = 0;
        const double probabilities[] = { 0.2, 0.4, 0.6 };
        for (auto & preset : preset_names()) {
            for (int i = 0 ; i < per_preset ; ++i) {
                Instance inst;
                inst.g = random_graph(rng, uniform_int(rng, 1, 10), probabilities[i % 3]);
                inst.weights = random_weights(rng, inst.g.capacity(), -5, 5, 4);
                inst.td = random_decomposition(rng, inst.g);
                inst.preset = preset;
                guarded(tally, [&] {
                    auto spec = problem_spec(preset);
                    inst.best = brute_force_optimal(inst.g, inst.weights, spec);
                    SolveOptions options;
                    options.preset = preset;
                    auto r = solve_pipeline(inst.g, inst.weights, inst.td, options);
                    tally.expect(r.solution.has_value() == inst.best.has_value(), [&] { return "feasibility differs for " + describe(inst); });
                    if (r.solution && inst.best) {
                        ++feasible;
                        tally.expect(r.solution->weight == inst.best->weight, [&] {
                                return "weight " + weight_to_string(r.solution->weight) + " vs oracle " + weight_to_string(inst.best->weight)
                                + " for " + describe(inst); });
                        auto check = feasibility_check(inst.g, inst.weights, spec, r.solution->vertices);
                        tally.expect(check.ok() && check.weight == r.solution->weight, [&] { return "infeasible answer for " + describe(inst); });
                        if (r.solution->vertices == inst.best->vertices)
                            ++same_set;
                    }
                }, [&] { return describe(inst); });
                instances.push_back(std::move(inst));
            }
        }
        return report(1, "oracle equivalence", tally, to_string(per_preset) + " instances per preset, " + to_string(feasible)
                + " feasible, " + to_string(same_set) + " identical sets");
    }

    /// The first feasible instances, spread evenly over the presets.
    auto sample(const vector<Instance> & instances, int per) -> vector<const Instance *>
    {
        vector<const Instance *> result;
        for (auto & preset : preset_names()) {
            int taken = 0;
            for (auto & inst : instances)
                if (inst.preset == preset && inst.best && taken < per) {
                    result.push_back(&inst);
                    ++taken;
                }
        }
        return result;
    }

    auto signature_completeness(const vector<const Instance *> & chosen) -> bool
    {
        Tally tally;
        long long bags = 0;
        for (auto * inst : chosen) {
            guarded(tally, [&] {
                auto spec = problem_spec(inst->preset);
                auto a = make_preset(inst->preset);
                vector<FamilyMode> modes{ FamilyMode::all };
                if (a->state_bound())
                    modes.push_back(FamilyMode::bounded);
                for (auto mode : modes) {
                    auto families = bag_families(inst->g, inst->weights, inst->td, spec.w, a, mode);
                    for (unsigned i = 0 ; i < families.size() ; ++i) {
                        auto trace = inst->best->vertices & inst->td.bags[i];
                        tally.expect(family_contains(families[i], trace), [&] {
                                return "trace " + trace.to_string() + " missing in " + family_mode_name(mode) + " mode for " + describe(*inst); });
                        ++bags;
                    }
                }
            }, [&] { return describe(*inst); });
        }
        return report(2, "signature completeness", tally, to_string(chosen.size()) + " instances, " + to_string(bags) + " bag families");
    }

    auto inner_decomposition(Random & rng) -> bool
    {
        Tally tally;
        int triples = 0;
        while (triples < 150) {
            auto g = random_graph(rng, uniform_int(rng, 1, 10), 0.2 * uniform_int(rng, 1, 3));
            int w = uniform_int(rng, 0, 2);
            VertexSet x;
            for (int v : g.vertices())
                if (uniform_int(rng, 0, 2))
                    x.insert(v);
            if (! treewidth_at_most(g, x, w))
                continue;
            ++triples;
            auto td = random_decomposition(rng, g);
            guarded(tally, [&] {
                int k = mu_width(g, td);
                int ell = ell_bound(k, w);
                auto host = make_supernice(g, td, ell);
                tally.expect(mu_width(g, host.decomposition()) == k, [&] { return string("host mu-width differs"); });
                auto [part, inner] = build_inner(g, host, x, w);
                auto verdict = verify_inner(g, host, part, inner, ell);
                tally.expect(verdict.ok(), [&] { return verdict.to_string(); });
                tally.expect(inner.width() <= ell, [&] { return "width " + to_string(inner.width()) + " above " + to_string(ell); });
                auto bounds = component_bounds(k, w);
                for (int t = 0 ; t < host.node_count() ; ++t) {
                    auto sizes = component_sizes(g, host, part, t);
                    tally.expect(sizes.heavy <= bounds.heavy && sizes.light_linked <= bounds.light_linked
                            && sizes.out_heavy <= bounds.out_heavy, [&] { return "component bound broken at node " + to_string(t); });
                }
            }, [&] { return "triple on " + emit_gr(g); });
        }
        return report(3, "inner decomposition", tally, to_string(triples) + " triples");
    }

    auto supernice_normalization(Random & rng) -> bool
    {
        Tally tally;
        int decompositions = 0;
        long long largest_ratio_numerator = 0, largest_ratio_denominator = 1;
        for ( ; decompositions < 150 ; ++decompositions) {
            auto g = random_graph(rng, uniform_int(rng, 0, 10), 0.2 * uniform_int(rng, 1, 3));
            auto t = random_decomposition(rng, g);
            for (int ell : { 0, 1, 2, 5 }) {
                guarded(tally, [&] {
                    auto d = make_supernice(g, t, ell);
                    auto valid = validate(g, d.decomposition());
                    tally.expect(valid.ok(), [&] { return valid.to_string(); });
                    auto nice = check_supernice(d, ell);
                    tally.expect(nice.ok(), [&] { return nice.to_string(); });
                    for (int s = 0 ; s < d.node_count() ; ++s) {
                        bool inside = std::any_of(t.bags.begin(), t.bags.end(), [&] (VertexSet b) { return d.bag(s).subset_of(b); });
                        tally.expect(inside, [&] { return "bag " + d.bag(s).to_string() + " is in no original bag"; });
                    }
                    for (auto & b : t.bags) {
                        bool kept = false;
                        for (int s = 0 ; s < d.node_count() && ! kept ; ++s)
                            kept = d.bag(s) == b;
                        tally.expect(kept, [&] { return "original bag " + b.to_string() + " was lost"; });
                    }
                    long long size = t.node_count() + g.order() + ell;
                    long long cube = size * size * size;
                    tally.expect(d.node_count() <= supernice_size_constant * cube, [&] { return "too many nodes"; });
                    if (d.node_count() * largest_ratio_denominator > largest_ratio_numerator * cube) {
                        largest_ratio_numerator = d.node_count();
                        largest_ratio_denominator = cube;
                    }
                }, [&] { return "decomposition of " + emit_gr(g); });
            }
        }
        return report(4, "supernice normalization", tally, to_string(decompositions) + " decompositions x 4 values of ell, c = "
                + to_string(supernice_size_constant) + ", largest nodes/(|V(T)|+n+ell)^3 = "
                + to_string(double(largest_ratio_numerator) / double(largest_ratio_denominator)));
    }

    auto automaton_agreement(Random & rng) -> bool
    {
        Tally tally;
        struct Entry
        {
            string name;
            AutomatonPtr automaton;
            Checker checker;
        };
        vector<Entry> entries;
        for (auto & p : preset_names())
            entries.push_back(Entry{ "preset " + p, make_preset(p), problem_spec(p).checker() });
        for (string f : { "edgeless", "forest", "connected", "true", "degree-cap:1", "degree-cap:2", "degree-exact:2",
                "degree-exact:3", "size-mod:0:2", "size-mod:1:3" })
            entries.push_back(Entry{ f, make_factor(f), factor_checker(f) });

        constexpr int pairs = 1000;
        long long accepted = 0;
        for (auto & e : entries) {
            for (int i = 0 ; i < pairs ; ++i) {
                auto g = random_graph(rng, uniform_int(rng, 2, 9), 0.1 * uniform_int(rng, 1, 6));
                vector<TreeDecomposition> decompositions;
                for (int attempt = 0 ; decompositions.size() < 3 && attempt < 50 ; ++attempt) {
                    auto t = random_binary_decomposition(rng, g);
                    if (std::find(decompositions.begin(), decompositions.end(), t) == decompositions.end())
                        decompositions.push_back(std::move(t));
                }
                tally.expect(decompositions.size() == 3, [&] { return "could not find three decompositions of " + emit_gr(g); });
                bool expected = e.checker(g, g.vertices());
                accepted += expected;
                for (auto & t : decompositions)
                    guarded(tally, [&] {
                        tally.expect(validate(g, t).ok(), [&] { return "invalid decomposition of " + emit_gr(g); });
                        tally.expect(accepts(*e.automaton, g, t) == expected, [&] { return e.name + " disagrees on " + emit_gr(g); });
                    }, [&] { return e.name; });
            }
        }
        return report(5, "automaton agreement", tally, to_string(entries.size()) + " automata x " + to_string(pairs)
                + " graphs x 3 decompositions, " + to_string(accepted) + " accepted");
    }

    auto suffix_structure(const vector<const Instance *> & chosen) -> bool
    {
        Tally tally;
        long long groups = 0;
        for (auto * inst : chosen) {
            guarded(tally, [&] {
                auto spec = problem_spec(inst->preset);
                auto a = make_preset(inst->preset);
                VertexSet x = inst->best->vertices;
                for (auto & b : inst->td.bags) {
                    auto sig = construct_signature_for(inst->g, x, b, mu_of_set(inst->g, b), spec.w);
                    auto violation = signature_violation(inst->g, x, sig);
                    tally.expect(violation.empty(), [&] { return violation; });
                    VertexSet u = dangling_vertices(sig, inst->g);
                    State q = a->unary(inst->g, a->leaf(inst->g, x - u), x - u, sig.c);
                    for (auto & group : classify_dangling(inst->g, inst->weights, u, sig.c, a.get())) {
                        ++groups;
                        long long inside = std::count_if(group.begin(), group.end(), [&] (int v) { return x.contains(v); });
                        bool suffix = true;
                        for (unsigned j = 0 ; j < group.size() ; ++j)
                            suffix = suffix && x.contains(group[j]) == (j + inside >= group.size());
                        tally.expect(suffix, [&] { return "trace on a group is not a suffix for " + describe(*inst); });
                        long long r = orbit_size(*a, inst->g, q, sig.c, group[0]);
                        long long outside = group.size() - inside;
                        tally.expect(inside <= std::max<long long>(spec.w + 1, r) || outside <= r,
                                [&] { return "threshold broken for " + describe(*inst); });
                    }
                }
            }, [&] { return describe(*inst); });
        }
        return report(6, "suffix structure", tally, to_string(chosen.size()) + " instances, " + to_string(groups) + " dangling groups");
    }

    auto ceil_div(long long a, long long b) -> long long
    {
        return (a + b - 1) / b;
    }

    /// The largest induced submatching of m, by exhaustion.
    auto largest_induced_submatching(const Graph & g, const Matching & m) -> int
    {
        int best = 0;
        for (unsigned mask = 0 ; mask < (1u << m.size()) ; ++mask) {
            Matching sub;
            for (unsigned i = 0 ; i < m.size() ; ++i)
                if (mask & (1u << i))
                    sub.push_back(m[i]);
            if (int(sub.size()) > best && is_induced_matching(g, sub))
                best = sub.size();
        }
        return best;
    }

    auto sparsity(Random & rng) -> bool
    {
        Tally tally;
        constexpr int graphs = 600;
        long long matchings = 0;
        for (int i = 0 ; i < graphs ; ++i) {
            auto g = random_graph(rng, uniform_int(rng, 0, 10), 0.1 * uniform_int(rng, 1, 8));
            int n = g.order();
            int tw = treewidth_exact(g);
            int largest_is = 0;
            for (auto & s : maximal_independent_sets(g))
                largest_is = std::max(largest_is, s.size());
            for (int w = std::max(tw, 0) ; w <= std::max(tw, 0) + 2 ; ++w) {
                tally.expect(g.edge_count() <= (long long)(n) * w, [&] { return "too many edges in " + emit_gr(g); });
                tally.expect(largest_is >= ceil_div(n, w + 1), [&] { return "independent set too small in " + emit_gr(g); });
            }
            int w = std::max(tw, 0);
            for (int j = 0 ; j < 3 ; ++j) {
                auto m = random_maximal_matching(rng, g);
                if (j == 2 && ! m.empty())
                    m.resize(uniform_int(rng, 1, int(m.size())));
                ++matchings;
                tally.expect(largest_induced_submatching(g, m) >= ceil_div(m.size(), w + 1),
                        [&] { return "induced submatching too small in " + emit_gr(g); });
            }
        }
        return report(7, "sparsity", tally, to_string(graphs) + " graphs, " + to_string(matchings) + " matchings");
    }

    auto format_fidelity() -> bool
    {
        Tally tally;
        int files = 0, negative = 0, fractional = 0;
        for (auto & entry : fs::directory_iterator(fs::path(IMTW_TEST_DATA_DIR) / "corpus")) {
            if (entry.path().extension() != ".gr")
                continue;
            auto base = entry.path();
            guarded(tally, [&] {
                auto g = parse_gr(read_file(base.string()));
                tally.expect(parse_gr(emit_gr(g)) == g, [&] { return base.string(); });
                tally.expect(emit_gr(parse_gr(emit_gr(g))) == emit_gr(g), [&] { return base.string(); });
                ++files;

                auto td_path = fs::path(base).replace_extension(".td");
                if (fs::exists(td_path)) {
                    auto t = parse_td(read_file(td_path.string()), g.capacity());
                    tally.expect(validate(g, t).ok(), [&] { return td_path.string() + " is not valid"; });
                    tally.expect(parse_td(emit_td(t, g.capacity()), g.capacity()) == t, [&] { return td_path.string(); });
                    ++files;
                }

                auto w_path = fs::path(base).replace_extension(".w");
                if (fs::exists(w_path)) {
                    auto w = parse_weights(read_file(w_path.string()), g.capacity());
                    tally.expect(parse_weights(emit_weights(w), g.capacity()) == w, [&] { return w_path.string(); });
                    for (auto & x : w.weights()) {
                        negative += x < 0;
                        fractional += x.denominator() != 1;
                    }
                    ++files;
                }
            }, [&] { return base.string(); });
        }
        tally.expect(files >= 50, [&] { return "only " + to_string(files) + " files"; });
        tally.expect(negative > 0 && fractional > 0, [&] { return string("corpus lacks negative or fractional weights"); });
        return report(8, "format fidelity", tally, to_string(files) + " files, " + to_string(negative) + " negative and "
                + to_string(fractional) + " fractional weights");
    }
}

auto main() -> int
{
    auto start = std::chrono::steady_clock::now();
    bool all = true;

    vector<Instance> instances;
    all = oracle_equivalence(instances) && all;
    auto chosen = sample(instances, 24);
    all = signature_completeness(chosen) && all;

    Random inner_rng(1003), supernice_rng(1004), automaton_rng(1005), sparsity_rng(1007);
    all = inner_decomposition(inner_rng) && all;
    all = supernice_normalization(supernice_rng) && all;
    all = automaton_agreement(automaton_rng) && all;
    all = suffix_structure(chosen) && all;
    all = sparsity(sparsity_rng) && all;
    all = format_fidelity() && all;

    cout << "acceptance " << (all ? "PASS" : "FAIL") << " in "
        << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s" << std::endl;
    return all ? 0 : 1;
}
