#include "domlab/vertex_set.hpp"

#include "domlab/errors.hpp"

#include <sstream>

namespace domlab {

namespace {

std::size_t word_count(int universe)
{
    return (static_cast<std::size_t>(universe) + 63) / 64;
}

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe)
{
    if (universe < 0)
        throw GraphError("negative vertex-set universe");
    words_.assign(word_count(universe), 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe)
{
    for (Vertex v : members)
        insert(v);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members)
    : VertexSet(universe)
{
    for (Vertex v : members)
        insert(v);
}

VertexSet VertexSet::full(int universe)
{
    VertexSet s(universe);
    for (auto& w : s.words_)
        w = ~std::uint64_t{0};
    if (int tail = universe % 64; tail != 0)
        s.words_.back() = (std::uint64_t{1} << tail) - 1;
    return s;
}

void VertexSet::check_vertex(Vertex v) const
{
    if (v < 0 || v >= universe_)
        throw GraphError("vertex " + std::to_string(v) + " outside 0.." +
                         std::to_string(universe_ - 1));
}

void VertexSet::check_same_universe(const VertexSet& other) const
{
    if (universe_ != other.universe_)
        throw GraphError("vertex sets over different universes (" +
                         std::to_string(universe_) + " vs " +
                         std::to_string(other.universe_) + ")");
}

bool VertexSet::contains(Vertex v) const
{
    check_vertex(v);
    return (words_[v / 64] >> (v % 64)) & 1;
}

void VertexSet::insert(Vertex v)
{
    check_vertex(v);
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v)
{
    check_vertex(v);
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

void VertexSet::clear() noexcept
{
    for (auto& w : words_)
        w = 0;
}

int VertexSet::count() const noexcept
{
    int c = 0;
    for (auto w : words_)
        c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const noexcept
{
    for (auto w : words_)
        if (w)
            return false;
    return true;
}

Vertex VertexSet::first() const noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w])
            return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
    return -1;
}

Vertex VertexSet::next(Vertex v) const noexcept
{
    Vertex start = v + 1;
    if (start >= universe_)
        return -1;
    std::size_t w = start / 64;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start % 64));
    while (true) {
        if (bits)
            return static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        if (++w == words_.size())
            return -1;
        bits = words_[w];
    }
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

bool VertexSet::intersects(const VertexSet& other) const
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

int VertexSet::intersection_count(const VertexSet& other) const
{
    check_same_universe(other);
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        c += std::popcount(words_[i] & other.words_[i]);
    return c;
}

bool VertexSet::is_subset_of(const VertexSet& other) const
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

std::string VertexSet::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first_member = true;
    for_each([&](Vertex v) {
        if (!first_member)
            os << ',';
        os << v;
        first_member = false;
    });
    os << '}';
    return os.str();
}

}  // namespace domlab
