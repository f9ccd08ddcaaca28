#include "domlab/graph.hpp"

#include "domlab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace domlab {

Graph Graph::from_edges(int n, std::span<const Edge> edges, std::string name)
{
    if (n < 1)
        throw GraphError("graph must have at least one vertex, got n=" + std::to_string(n));
    Graph g;
    g.n_ = n;
    g.name_ = std::move(name);
    g.adj_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw GraphError("loop at vertex " + std::to_string(u));
        g.adj_[u].insert(v);
        g.adj_[v].insert(u);
    }
    int degree_sum = 0;
    for (const auto& row : g.adj_)
        degree_sum += row.count();
    g.m_ = degree_sum / 2;
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges, std::string name)
{
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(name));
}

const VertexSet& Graph::neighbors(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw GraphError("vertex " + std::to_string(v) + " not in graph of order " +
                         std::to_string(n_));
    return adj_[v];
}

int Graph::max_degree() const
{
    int d = 0;
    for (const auto& row : adj_)
        d = std::max(d, row.count());
    return d;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    return neighbors(u).contains(v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = adj_[u].next(u); v != -1; v = adj_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

Graph Graph::with_name(std::string name) const
{
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
}

VertexSet open_nbhd(const Graph& g, Vertex v)
{
    return g.neighbors(v);
}

VertexSet closed_nbhd(const Graph& g, Vertex v)
{
    VertexSet s = g.neighbors(v);
    s.insert(v);
    return s;
}

VertexSet private_nbhd(const Graph& g, Vertex v, const VertexSet& s)
{
    if (s.universe() != g.order())
        throw GraphError("vertex set universe does not match graph order");
    if (!s.contains(v))
        throw GraphError("private neighbourhood requires v in S (v=" + std::to_string(v) + ")");
    VertexSet out(g.order());
    for (Vertex w = 0; w < g.order(); ++w) {
        const VertexSet& nw = g.neighbors(w);
        if (nw.contains(v) && nw.intersection_count(s) == 1)
            out.insert(w);
    }
    return out;
}

bool is_independent(const Graph& g, const VertexSet& s)
{
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (ok && g.neighbors(v).intersects(s))
            ok = false;
    });
    return ok;
}

bool is_claw_free(const Graph& g)
{
    for (Vertex c = 0; c < g.order(); ++c) {
        std::vector<Vertex> nb = g.neighbors(c).members();
        const std::size_t d = nb.size();
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a + 1; b < d; ++b) {
                if (g.adjacent(nb[a], nb[b]))
                    continue;
                for (std::size_t e = b + 1; e < d; ++e)
                    if (!g.adjacent(nb[a], nb[e]) && !g.adjacent(nb[b], nb[e]))
                        return false;
            }
    }
    return true;
}

bool is_connected(const Graph& g)
{
    VertexSet seen(g.order());
    std::vector<Vertex> stack{0};
    seen.insert(0);
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        g.neighbors(v).for_each([&](Vertex w) {
            if (!seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        });
    }
    return seen.count() == g.order();
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    std::vector<Edge> edges = a.edges();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + a.order(), v + a.order());
    return Graph::from_edges(a.order() + b.order(), edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep)
{
    std::vector<Vertex> index(g.order(), -1);
    int next = 0;
    keep.for_each([&](Vertex v) { index[v] = next++; });
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0)
            edges.emplace_back(index[u], index[v]);
    return Graph::from_edges(next, edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm)
{
    if (static_cast<int>(perm.size()) != g.order())
        throw GraphError("permutation length does not match graph order");
    std::vector<Vertex> check(perm.begin(), perm.end());
    std::sort(check.begin(), check.end());
    for (int i = 0; i < g.order(); ++i)
        if (check[i] != i)
            throw GraphError("relabel: not a permutation");
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.order(), edges, g.name());
}

}  // namespace domlab
