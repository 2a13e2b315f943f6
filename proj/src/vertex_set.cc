/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <imtw/vertex_set.hh>
#include <imtw/errors.hh>

using std::string;
using std::to_string;
using std::vector;

namespace imtw
{
    namespace
    {
        auto check_range(int v) -> void
        {
            if (v < 0 || v >= VertexSet::capacity)
                throw ContractError("vertex " + to_string(v) + " outside 0.." + to_string(VertexSet::capacity - 1));
        }
    }

    VertexSet::VertexSet(std::initializer_list<int> vertices)
    {
        for (int v : vertices)
            insert(v);
    }

    auto VertexSet::singleton(int v) -> VertexSet
    {
        check_range(v);
        return from_bits(std::uint64_t{ 1 } << v);
    }

    auto VertexSet::range(int n) -> VertexSet
    {
        if (n < 0 || n > capacity)
            throw ContractError("vertex range of size " + std::to_string(n) + " unsupported");
        return from_bits(n == capacity ? ~std::uint64_t{ 0 } : ((std::uint64_t{ 1 } << n) - 1));
    }

    auto VertexSet::from_vector(const vector<int> & vertices) -> VertexSet
    {
        VertexSet result;
        for (int v : vertices)
            result.insert(v);
        return result;
    }

    auto VertexSet::insert(int v) -> void
    {
        check_range(v);
        _bits |= std::uint64_t{ 1 } << v;
    }

    auto VertexSet::erase(int v) -> void
    {
        check_range(v);
        _bits &= ~(std::uint64_t{ 1 } << v);
    }

    auto VertexSet::with(int v) const -> VertexSet
    {
        auto result = *this;
        result.insert(v);
        return result;
    }

    auto VertexSet::without(int v) const -> VertexSet
    {
        auto result = *this;
        result.erase(v);
        return result;
    }

    auto VertexSet::to_vector() const -> vector<int>
    {
        return vector<int>(begin(), end());
    }

    auto VertexSet::to_string() const -> string
    {
        string result = "{";
        bool first = true;
        for (int v : *this) {
            if (! first)
                result += ",";
            first = false;
            result += std::to_string(v);
        }
        return result + "}";
    }
}
