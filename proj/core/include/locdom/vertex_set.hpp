#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace locdom {

using Vertex = int;

/// Set of vertices of a graph with at most 64 vertices, stored as one machine word.
class VertexSet {
  public:
    using word_type = std::uint64_t;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(word_type bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) bits_ |= bit(v);
    }

    static constexpr VertexSet single(Vertex v) { return VertexSet(bit(v)); }
    /// {0, ..., n-1}
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~word_type{0} : (word_type{1} << n) - 1);
    }
    static VertexSet from(const std::vector<Vertex>& vs) {
        VertexSet s;
        for (Vertex v : vs) s.insert(v);
        return s;
    }

    constexpr word_type bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    /// Smallest member; undefined on the empty set.
    constexpr Vertex first() const { return std::countr_zero(bits_); }

    constexpr void insert(Vertex v) { bits_ |= bit(v); }
    constexpr void erase(Vertex v) { bits_ &= ~bit(v); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    /// Set difference.
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    class iterator {
      public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = Vertex;

        constexpr iterator() = default;
        constexpr explicit iterator(word_type rest) : rest_(rest) {}
        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;

      private:
        word_type rest_ = 0;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  private:
    static constexpr word_type bit(Vertex v) { return word_type{1} << v; }

    word_type bits_ = 0;
};

}  // namespace locdom
