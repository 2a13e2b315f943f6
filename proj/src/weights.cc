/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <imtw/weights.hh>
#include <imtw/errors.hh>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

using std::string;
using std::to_string;
using std::vector;

namespace imtw
{
    auto weight_to_string(const Weight & w) -> string
    {
        if (w.denominator() == 1)
            return to_string(w.numerator());
        return to_string(w.numerator()) + "/" + to_string(w.denominator());
    }

    auto weight_to_fraction_string(const Weight & w) -> string
    {
        return to_string(w.numerator()) + "/" + to_string(w.denominator());
    }

    namespace
    {
        auto parse_integer(const string & s) -> std::int64_t
        {
            std::int64_t result = 0;
            const char * begin = s.data(), * end = s.data() + s.size();
            if (begin != end && *begin == '+')
                ++begin;
            auto [ptr, ec] = std::from_chars(begin, end, result);
            if (ec != std::errc{} || ptr != end || begin == end)
                throw std::invalid_argument("malformed integer '" + s + "'");
            return result;
        }
    }

    auto parse_weight(const string & s) -> Weight
    {
        auto slash = s.find('/');
        if (string::npos == slash)
            return Weight{ parse_integer(s) };

        auto num = parse_integer(s.substr(0, slash));
        auto den_str = s.substr(slash + 1);
        if (! den_str.empty() && (den_str[0] == '-' || den_str[0] == '+'))
            throw std::invalid_argument("denominator must be a positive integer in '" + s + "'");
        auto den = parse_integer(den_str);
        if (den <= 0)
            throw std::invalid_argument("denominator must be a positive integer in '" + s + "'");
        return Weight{ num, den };
    }

    VertexWeights::VertexWeights(int n) :
        _weights(n, Weight{ 1 }),
        _rank(n)
    {
        std::iota(_rank.begin(), _rank.end(), 0);
    }

    VertexWeights::VertexWeights(vector<Weight> weights) :
        _weights(std::move(weights)),
        _rank(_weights.size())
    {
        std::iota(_rank.begin(), _rank.end(), 0);
    }

    auto VertexWeights::total(VertexSet x) const -> Weight
    {
        Weight result{ 0 };
        for (int v : x)
            result += _weights.at(v);
        return result;
    }

    auto VertexWeights::set_order(const vector<int> & increasing) -> void
    {
        if (increasing.size() != _weights.size())
            throw ContractError("vertex order has " + to_string(increasing.size()) + " entries, expected " + to_string(_weights.size()));
        vector<int> rank(_weights.size(), -1);
        for (int i = 0 ; i < int(increasing.size()) ; ++i) {
            int v = increasing[i];
            if (v < 0 || v >= int(rank.size()) || rank[v] != -1)
                throw ContractError("vertex order is not a permutation");
            rank[v] = i;
        }
        _rank = std::move(rank);
    }

    auto VertexWeights::has_default_order() const -> bool
    {
        for (int i = 0 ; i < int(_rank.size()) ; ++i)
            if (_rank[i] != i)
                return false;
        return true;
    }

    auto VertexWeights::sorted(VertexSet x) const -> vector<int>
    {
        auto result = x.to_vector();
        std::sort(result.begin(), result.end(), [&] (int u, int v) { return _rank[u] < _rank[v]; });
        return result;
    }

    auto VertexWeights::sorted_by_weight(VertexSet x) const -> vector<int>
    {
        auto result = x.to_vector();
        std::sort(result.begin(), result.end(), [&] (int u, int v) {
                if (_weights[u] != _weights[v])
                    return _weights[u] < _weights[v];
                return _rank[u] < _rank[v];
                });
        return result;
    }

    auto VertexWeights::lex_larger(VertexSet a, VertexSet b) const -> bool
    {
        if (a.size() != b.size())
            return a.size() > b.size();
        // as for the default order, the earliest element of the symmetric difference decides
        int earliest = -1;
        for (int v : a ^ b)
            if (earliest == -1 || _rank[v] < _rank[earliest])
                earliest = v;
        return earliest != -1 && b.contains(earliest);
    }

    auto VertexWeights::better(VertexSet a, const Weight & wa, VertexSet b, const Weight & wb) const -> bool
    {
        if (wa != wb)
            return wa > wb;
        return lex_larger(a, b);
    }

    auto lex_larger(VertexSet a, VertexSet b) -> bool
    {
        if (a.size() != b.size())
            return a.size() > b.size();
        // below the smallest element of the symmetric difference both sorted sequences agree, and
        // whichever set owns that element has the smaller entry at the first differing position
        auto diff = a ^ b;
        return ! diff.empty() && b.contains(diff.first());
    }
}
