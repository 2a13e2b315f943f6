/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef IMTW_GUARD_VERTEX_SET_HH
#define IMTW_GUARD_VERTEX_SET_HH 1

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace imtw
{
    /**
     * A set of vertices drawn from 0..63, stored as a single machine word.
     * Every set in the solver (bags, solutions, signature parts) uses this type,
     * so sets from different subgraphs compare directly.
     */
    class VertexSet
    {
        private:
            std::uint64_t _bits = 0;

        public:
            static constexpr int capacity = 64;

            class const_iterator
            {
                private:
                    std::uint64_t _rest = 0;

                public:
                    using iterator_category = std::forward_iterator_tag;
                    using value_type = int;
                    using difference_type = std::ptrdiff_t;
                    using pointer = const int *;
                    using reference = int;

                    constexpr const_iterator() = default;
                    constexpr explicit const_iterator(std::uint64_t rest) : _rest(rest) { }

                    constexpr auto operator* () const -> int { return std::countr_zero(_rest); }

                    constexpr auto operator++ () -> const_iterator &
                    {
                        _rest &= _rest - 1;
                        return *this;
                    }

                    constexpr auto operator++ (int) -> const_iterator
                    {
                        auto old = *this;
                        ++*this;
                        return old;
                    }

                    constexpr auto operator== (const const_iterator &) const -> bool = default;
            };

            constexpr VertexSet() = default;

            static constexpr auto from_bits(std::uint64_t bits) -> VertexSet
            {
                VertexSet result;
                result._bits = bits;
                return result;
            }

            VertexSet(std::initializer_list<int> vertices);

            static auto singleton(int v) -> VertexSet;

            /// {0, ..., n-1}
            static auto range(int n) -> VertexSet;

            static auto from_vector(const std::vector<int> & vertices) -> VertexSet;

            constexpr auto bits() const -> std::uint64_t { return _bits; }
            constexpr auto empty() const -> bool { return 0 == _bits; }
            constexpr auto size() const -> int { return std::popcount(_bits); }

            constexpr auto contains(int v) const -> bool
            {
                return v >= 0 && v < capacity && ((_bits >> v) & 1);
            }

            auto insert(int v) -> void;
            auto erase(int v) -> void;

            [[nodiscard]] auto with(int v) const -> VertexSet;
            [[nodiscard]] auto without(int v) const -> VertexSet;

            /// Smallest element, or -1 when empty.
            constexpr auto first() const -> int
            {
                return empty() ? -1 : std::countr_zero(_bits);
            }

            constexpr auto subset_of(VertexSet other) const -> bool { return 0 == (_bits & ~other._bits); }
            constexpr auto intersects(VertexSet other) const -> bool { return 0 != (_bits & other._bits); }

            constexpr auto begin() const -> const_iterator { return const_iterator{ _bits }; }
            constexpr auto end() const -> const_iterator { return const_iterator{ 0 }; }

            auto to_vector() const -> std::vector<int>;

            /// "{0,2,5}" with 0-indexed ids.
            auto to_string() const -> std::string;

            constexpr auto operator| (VertexSet o) const -> VertexSet { return from_bits(_bits | o._bits); }
            constexpr auto operator& (VertexSet o) const -> VertexSet { return from_bits(_bits & o._bits); }
            constexpr auto operator- (VertexSet o) const -> VertexSet { return from_bits(_bits & ~o._bits); }
            constexpr auto operator^ (VertexSet o) const -> VertexSet { return from_bits(_bits ^ o._bits); }

            constexpr auto operator|= (VertexSet o) -> VertexSet & { _bits |= o._bits; return *this; }
            constexpr auto operator&= (VertexSet o) -> VertexSet & { _bits &= o._bits; return *this; }
            constexpr auto operator-= (VertexSet o) -> VertexSet & { _bits &= ~o._bits; return *this; }

            constexpr auto operator== (const VertexSet &) const -> bool = default;

            /// Arbitrary but fixed total order (by bit pattern), for sorting and map keys.
            constexpr auto operator<=> (const VertexSet & o) const -> std::strong_ordering { return _bits <=> o._bits; }
    };

    /// splitmix64 finaliser.
    constexpr auto scramble(std::uint64_t x) -> std::uint64_t
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    /// Folds v into the running hash h.
    constexpr auto combine_hash(std::size_t h, std::uint64_t v) -> std::size_t
    {
        return scramble(h ^ scramble(v));
    }

    struct VertexSetHash
    {
        auto operator() (VertexSet s) const noexcept -> std::size_t
        {
            return scramble(s.bits());
        }
    };

    /// Calls f on every subset of `universe`, including the empty set and `universe` itself.
    template <typename F_>
    auto for_each_subset(VertexSet universe, F_ && f) -> void
    {
        std::uint64_t u = universe.bits(), s = 0;
        while (true) {
            f(VertexSet::from_bits(s));
            if (s == u)
                break;
            s = (s - u) & u;
        }
    }
}

#endif
