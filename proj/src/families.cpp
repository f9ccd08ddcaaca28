#include "domlab/families.hpp"

#include "domlab/errors.hpp"

#include <string>

namespace domlab::families {

Graph path(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e, "P" + std::to_string(n));
}

Graph cycle(int n)
{
    if (n < 3)
        throw GraphError("cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e, "C" + std::to_string(n));
}

Graph complete(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph::from_edges(n, e, "K" + std::to_string(n));
}

Graph empty(int n)
{
    return Graph::from_edges(n, std::span<const Edge>{}, "E" + std::to_string(n));
}

Graph complete_bipartite(int a, int b)
{
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            e.emplace_back(i, a + j);
    return Graph::from_edges(a + b, e, "K" + std::to_string(a) + "," + std::to_string(b));
}

Graph star(int leaves)
{
    return complete_bipartite(1, leaves);
}

Graph petersen()
{
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph::from_edges(10, e, "Petersen");
}

Graph hypercube(int dim)
{
    if (dim < 0 || dim > 12)
        throw GraphError("hypercube dimension out of range");
    const int n = 1 << dim;
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < dim; ++b)
            if (int w = v ^ (1 << b); v < w)
                e.emplace_back(v, w);
    return Graph::from_edges(n, e, "Q" + std::to_string(dim));
}

}  // namespace domlab::families
