#include "domlab/product.hpp"

#include "domlab/errors.hpp"

#include <string>

namespace domlab {

namespace {

Graph build_product(const Graph& g, const Graph& h, int vertex_cap)
{
    const long long n = static_cast<long long>(g.order()) * h.order();
    if (n > vertex_cap)
        throw SizeError("product has " + std::to_string(n) + " vertices, cap is " +
                        std::to_string(vertex_cap));
    const int nh = h.order();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.order()) * h.size() +
                  static_cast<std::size_t>(nh) * g.size());
    // (g,h)~(g,h') for hh' in E(H)
    for (Vertex x = 0; x < g.order(); ++x)
        for (auto [a, b] : h.edges())
            edges.emplace_back(x * nh + a, x * nh + b);
    // (g,h)~(g',h) for gg' in E(G)
    for (auto [a, b] : g.edges())
        for (Vertex y = 0; y < nh; ++y)
            edges.emplace_back(a * nh + y, b * nh + y);
    std::string name;
    if (!g.name().empty() && !h.name().empty())
        name = g.name() + "□" + h.name();
    return Graph::from_edges(static_cast<int>(n), edges, name);
}

}  // namespace

CartesianProduct::CartesianProduct(const Graph& g, const Graph& h, int vertex_cap)
    : g_(g), h_(h), product_(build_product(g, h, vertex_cap))
{
}

Vertex CartesianProduct::flat(ProductVertex pv) const
{
    if (pv.g < 0 || pv.g >= g_.order() || pv.h < 0 || pv.h >= h_.order())
        throw GraphError("product coordinate (" + std::to_string(pv.g) + "," +
                         std::to_string(pv.h) + ") out of range");
    return pv.g * h_.order() + pv.h;
}

ProductVertex CartesianProduct::coords(Vertex flat) const
{
    if (flat < 0 || flat >= product_.order())
        throw GraphError("product vertex " + std::to_string(flat) + " out of range");
    return {flat / h_.order(), flat % h_.order()};
}

Graph cartesian_product(const Graph& g, const Graph& h, int vertex_cap)
{
    return CartesianProduct(g, h, vertex_cap).graph();
}

}  // namespace domlab
