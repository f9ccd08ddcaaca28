#pragma once

#include "domlab/graph.hpp"

#include <compare>

namespace domlab {

inline constexpr int kDefaultVertexCap = 4096;

/// Coordinates (g, h) of a vertex of G□H.
struct ProductVertex {
    Vertex g = 0;
    Vertex h = 0;

    friend auto operator<=>(const ProductVertex&, const ProductVertex&) = default;
};

/// G□H together with the coordinate bijection flat = g·n(H) + h.
class CartesianProduct {
public:
    CartesianProduct(const Graph& g, const Graph& h, int vertex_cap = kDefaultVertexCap);

    const Graph& graph() const noexcept { return product_; }
    const Graph& factor_g() const noexcept { return g_; }
    const Graph& factor_h() const noexcept { return h_; }

    Vertex flat(ProductVertex pv) const;
    ProductVertex coords(Vertex flat) const;

private:
    Graph g_;
    Graph h_;
    Graph product_;
};

/// Convenience wrapper returning only the product graph.
Graph cartesian_product(const Graph& g, const Graph& h, int vertex_cap = kDefaultVertexCap);

}  // namespace domlab
