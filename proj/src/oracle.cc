/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <imtw/errors.hh>
#include <imtw/graph_algorithms.hh>
#include <imtw/oracle.hh>

#include <sstream>

using std::optional;
using std::string;
using std::vector;

namespace imtw
{
    namespace
    {
        auto edges_within(const Graph & g, VertexSet x) -> int
        {
            int twice = 0;
            for (int v : x)
                twice += (g.neighbours(v) & x).size();
            return twice / 2;
        }

        auto reachable(const Graph & g, VertexSet x, int start) -> VertexSet
        {
            VertexSet seen = VertexSet::singleton(start), frontier = seen;
            while (! frontier.empty()) {
                VertexSet next;
                for (int v : frontier)
                    next |= g.neighbours(v) & x;
                frontier = next - seen;
                seen |= next;
            }
            return seen;
        }

        auto component_count(const Graph & g, VertexSet x) -> int
        {
            int result = 0;
            while (! x.empty()) {
                x -= reachable(g, x, x.first());
                ++result;
            }
            return result;
        }

        auto parse_number(const string & s, const string & spec) -> int
        {
            try {
                std::size_t used = 0;
                int result = std::stoi(s, &used);
                if (used == s.size())
                    return result;
            }
            catch (const std::logic_error &) {
            }
            throw ContractError("malformed property '" + spec + "'");
        }
    }

    auto is_edgeless(const Graph & g, VertexSet x) -> bool
    {
        for (int v : x)
            if (g.neighbours(v).intersects(x))
                return false;
        return true;
    }

    auto is_forest(const Graph & g, VertexSet x) -> bool
    {
        return edges_within(g, x) == x.size() - component_count(g, x);
    }

    auto is_connected(const Graph & g, VertexSet x) -> bool
    {
        return ! x.empty() && reachable(g, x, x.first()) == x;
    }

    auto is_cycle(const Graph & g, VertexSet x) -> bool
    {
        return is_connected(g, x) && degree_exactly(g, x, 2);
    }

    auto is_path(const Graph & g, VertexSet x) -> bool
    {
        return is_connected(g, x) && is_forest(g, x) && max_degree_le(g, x, 2);
    }

    auto max_degree_le(const Graph & g, VertexSet x, int d) -> bool
    {
        for (int v : x)
            if ((g.neighbours(v) & x).size() > d)
                return false;
        return true;
    }

    auto degree_exactly(const Graph & g, VertexSet x, int d) -> bool
    {
        for (int v : x)
            if ((g.neighbours(v) & x).size() != d)
                return false;
        return true;
    }

    auto factor_checker(const string & spec) -> Checker
    {
        vector<string> parts;
        std::stringstream in(spec);
        for (string p ; std::getline(in, p, ':') ; )
            parts.push_back(p);

        if (parts.size() == 1 && parts[0] == "edgeless")
            return is_edgeless;
        if (parts.size() == 1 && parts[0] == "forest")
            return is_forest;
        if (parts.size() == 1 && parts[0] == "connected")
            return is_connected;
        if (parts.size() == 1 && parts[0] == "true")
            return [] (const Graph &, VertexSet) { return true; };
        if (parts.size() == 2 && parts[0] == "degree-cap") {
            int d = parse_number(parts[1], spec);
            return [d] (const Graph & g, VertexSet x) { return max_degree_le(g, x, d); };
        }
        if (parts.size() == 2 && parts[0] == "degree-exact") {
            int d = parse_number(parts[1], spec);
            return [d] (const Graph & g, VertexSet x) { return degree_exactly(g, x, d); };
        }
        if (parts.size() == 3 && parts[0] == "size-mod") {
            int q = parse_number(parts[1], spec), r = parse_number(parts[2], spec);
            if (r < 1 || q < 0 || q >= r)
                throw ContractError("size-mod needs 0 <= q < r");
            return [q, r] (const Graph &, VertexSet x) { return x.size() % r == q; };
        }
        throw ContractError("unknown property '" + spec + "'");
    }

    auto ProblemSpec::checker() const -> Checker
    {
        Checker base;
        if (preset == "mwis")
            base = is_edgeless;
        else if (preset == "forest")
            base = is_forest;
        else if (preset == "tree")
            base = [] (const Graph & g, VertexSet x) { return is_connected(g, x) && is_forest(g, x); };
        else if (preset == "path")
            base = is_path;
        else if (preset == "cycle")
            base = is_cycle;
        else
            throw ContractError("unknown problem '" + preset + "'");

        vector<Checker> all{ base };
        for (auto & e : extras)
            all.push_back(factor_checker(e));
        return [all] (const Graph & g, VertexSet x) {
            for (auto & c : all)
                if (! c(g, x))
                    return false;
            return true;
        };
    }

    auto problem_spec(const string & preset, const vector<string> & extras) -> ProblemSpec
    {
        int w;
        if (preset == "mwis")
            w = 0;
        else if (preset == "forest" || preset == "tree" || preset == "path")
            w = 1;
        else if (preset == "cycle")
            w = 2;
        else
            throw ContractError("unknown problem '" + preset + "'");
        return ProblemSpec{ preset, w, extras };
    }

    auto brute_force_optimal(const Graph & g, const VertexWeights & weights, const ProblemSpec & spec,
            const Guards & guards) -> optional<Solution>
    {
        if (g.order() > guards.max_oracle_n)
            throw ResourceError("oracle limited to " + std::to_string(guards.max_oracle_n) + " vertices");

        auto checker = spec.checker();
        optional<Solution> best;
        for_each_subset(g.vertices(), [&] (VertexSet x) {
            Weight wx = weights.total(x);
            if (best && ! weights.better(x, wx, best->vertices, best->weight))
                return;
            if (! checker(g, x) || ! treewidth_at_most(g, x, spec.w, guards))
                return;
            best = Solution{ x, wx };
        });
        return best;
    }

    auto feasibility_check(const Graph & g, const VertexWeights & weights, const ProblemSpec & spec, VertexSet x,
            const Guards & guards) -> FeasibilityReport
    {
        FeasibilityReport report;
        if (! x.subset_of(g.vertices())) {
            report.reason = "vertices outside the graph";
            return report;
        }
        report.weight = weights.total(x);
        report.treewidth_ok = treewidth_exact(induced_subgraph(g, x), guards) <= spec.w;
        report.checker_ok = spec.checker()(g, x);
        if (! report.treewidth_ok)
            report.reason = "treewidth";
        else if (! report.checker_ok)
            report.reason = "checker";
        return report;
    }
}
