#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace domlab {

using Vertex = int;

/// Subset of {0, ..., universe-1}, stored as a packed bitmask.
///
/// Binary operations require both operands to share the same universe.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<Vertex> members);
    VertexSet(int universe, std::span<const Vertex> members);

    static VertexSet full(int universe);

    int universe() const noexcept { return universe_; }

    bool contains(Vertex v) const;
    void insert(Vertex v);
    void erase(Vertex v);
    void clear() noexcept;

    int count() const noexcept;
    bool empty() const noexcept;

    /// Smallest member, or -1 when empty.
    Vertex first() const noexcept;
    /// Smallest member greater than v, or -1.
    Vertex next(Vertex v) const noexcept;

    std::vector<Vertex> members() const;

    template <class F>
    void for_each(F&& fn) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                fn(static_cast<Vertex>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    bool intersects(const VertexSet& other) const;
    int intersection_count(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// "{0,2,5}"
    std::string to_string() const;

private:
    void check_vertex(Vertex v) const;
    void check_same_universe(const VertexSet& other) const;

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace domlab
