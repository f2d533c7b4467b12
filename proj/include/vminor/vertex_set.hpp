#ifndef VMINOR_VERTEX_SET_HPP
#define VMINOR_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace vminor
{

inline constexpr int max_vertices = 64;

/// A subset of {0, ..., 63} stored as a single machine word.
class VertexSet
{
public:
    using word_type = std::uint64_t;

    class iterator
    {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(word_type rest) : _rest(rest) {}

        constexpr auto operator*() const -> int { return std::countr_zero(_rest); }
        constexpr auto operator++() -> iterator &
        {
            _rest &= _rest - 1;
            return *this;
        }
        constexpr auto operator++(int) -> iterator
        {
            auto old = *this;
            ++*this;
            return old;
        }
        constexpr auto operator==(const iterator &) const -> bool = default;

    private:
        word_type _rest = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(word_type bits) : _bits(bits) {}
    constexpr VertexSet(std::initializer_list<int> vs)
    {
        for (int v : vs)
            insert(v);
    }

    static constexpr auto range(int n) -> VertexSet
    {
        return VertexSet(n >= 64 ? ~word_type{0} : ((word_type{1} << n) - 1));
    }
    static constexpr auto single(int v) -> VertexSet { return VertexSet(word_type{1} << v); }
    static auto from(const std::vector<int> & vs) -> VertexSet
    {
        VertexSet s;
        for (int v : vs)
            s.insert(v);
        return s;
    }

    constexpr auto bits() const -> word_type { return _bits; }
    constexpr auto size() const -> int { return std::popcount(_bits); }
    constexpr auto empty() const -> bool { return _bits == 0; }
    constexpr auto contains(int v) const -> bool { return (_bits >> v) & 1U; }
    /// Smallest member; undefined on the empty set.
    constexpr auto front() const -> int { return std::countr_zero(_bits); }

    constexpr auto insert(int v) -> void { _bits |= word_type{1} << v; }
    constexpr auto erase(int v) -> void { _bits &= ~(word_type{1} << v); }

    constexpr auto with(int v) const -> VertexSet { return VertexSet(_bits | (word_type{1} << v)); }
    constexpr auto without(int v) const -> VertexSet { return VertexSet(_bits & ~(word_type{1} << v)); }

    constexpr auto is_subset_of(VertexSet other) const -> bool { return (_bits & ~other._bits) == 0; }
    constexpr auto intersects(VertexSet other) const -> bool { return (_bits & other._bits) != 0; }

    constexpr auto begin() const -> iterator { return iterator(_bits); }
    constexpr auto end() const -> iterator { return iterator(0); }

    auto to_vector() const -> std::vector<int> { return {begin(), end()}; }

    constexpr auto operator&(VertexSet o) const -> VertexSet { return VertexSet(_bits & o._bits); }
    constexpr auto operator|(VertexSet o) const -> VertexSet { return VertexSet(_bits | o._bits); }
    constexpr auto operator^(VertexSet o) const -> VertexSet { return VertexSet(_bits ^ o._bits); }
    constexpr auto operator-(VertexSet o) const -> VertexSet { return VertexSet(_bits & ~o._bits); }
    constexpr auto operator&=(VertexSet o) -> VertexSet & { _bits &= o._bits; return *this; }
    constexpr auto operator|=(VertexSet o) -> VertexSet & { _bits |= o._bits; return *this; }
    constexpr auto operator^=(VertexSet o) -> VertexSet & { _bits ^= o._bits; return *this; }
    constexpr auto operator-=(VertexSet o) -> VertexSet & { _bits &= ~o._bits; return *this; }

    constexpr auto operator==(const VertexSet &) const -> bool = default;

private:
    word_type _bits = 0;
};

/// Lexicographic order on the ascending member lists: {0,5} < {1,2} and
/// {0,1} < {0,1,2}. Used wherever "least vertex set" tie-breaking is needed.
auto lex_less(VertexSet a, VertexSet b) -> bool;

} // namespace vminor

#endif
