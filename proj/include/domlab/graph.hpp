#pragma once

#include "domlab/vertex_set.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace domlab {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable finite simple graph on vertices 0..n-1 with one adjacency
/// bitmask per vertex.
class Graph {
public:
    /// Symmetric closure of `edges`; duplicates collapse. Throws GraphError on
    /// n < 1, an out-of-range endpoint, or a loop.
    static Graph from_edges(int n, std::span<const Edge> edges, std::string name = {});
    static Graph from_edges(int n, std::initializer_list<Edge> edges, std::string name = {});

    int order() const noexcept { return n_; }
    /// Edge count m(G).
    int size() const noexcept { return m_; }

    const VertexSet& neighbors(Vertex v) const;
    int degree(Vertex v) const { return neighbors(v).count(); }
    int max_degree() const;
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    const std::string& name() const noexcept { return name_; }
    Graph with_name(std::string name) const;

    /// Structural equality; the name tag is ignored.
    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    Graph() = default;

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
    std::string name_;
};

VertexSet open_nbhd(const Graph& g, Vertex v);
VertexSet closed_nbhd(const Graph& g, Vertex v);

/// pn(v, S) = { w in V(G) : N(w) ∩ S = {v} }. Requires v ∈ s.
VertexSet private_nbhd(const Graph& g, Vertex v, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);

/// No vertex has three pairwise non-adjacent neighbours.
bool is_claw_free(const Graph& g);

bool is_connected(const Graph& g);

/// Vertices of `a` first, then `b` shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Subgraph induced by `keep`, relabelled in increasing vertex order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Relabel: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace domlab
