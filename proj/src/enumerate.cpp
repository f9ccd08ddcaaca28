#include "domlab/enumerate.hpp"

#include "domlab/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <unordered_set>

namespace domlab {

namespace {

constexpr int kMaxCanonicalOrder = 11;  // 55 upper-triangle bits

std::uint64_t code_under(const Graph& g, const std::vector<Vertex>& position_to_vertex)
{
    const int n = g.order();
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            code = (code << 1) | (g.adjacent(position_to_vertex[i], position_to_vertex[j]) ? 1 : 0);
    return code;
}

// Stable colour refinement. Colours are dense 0..c-1 and ordered by an
// isomorphism-invariant signature.
std::vector<int> refine(const Graph& g, std::vector<int> colour)
{
    const int n = g.order();
    while (true) {
        std::vector<std::pair<std::vector<int>, Vertex>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            std::vector<int> s{colour[v]};
            std::vector<int> nb;
            g.neighbors(v).for_each([&](Vertex w) { nb.push_back(colour[w]); });
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {std::move(s), v};
        }
        std::sort(sig.begin(), sig.end());
        std::vector<int> next(n);
        int c = 0;
        for (int idx = 0; idx < n; ++idx) {
            if (idx > 0 && sig[idx].first != sig[idx - 1].first)
                ++c;
            next[sig[idx].second] = c;
        }
        const int before = *std::max_element(colour.begin(), colour.end());
        if (c == before)
            return next;
        colour = std::move(next);
    }
}

void search(const Graph& g, const std::vector<int>& colour, std::uint64_t& best, bool& have)
{
    const int n = g.order();
    std::vector<int> size(n, 0);
    for (int c : colour)
        ++size[c];
    // First smallest non-singleton cell.
    int target = -1;
    for (int c = 0; c < n; ++c)
        if (size[c] > 1 && (target == -1 || size[c] < size[target]))
            target = c;
    if (target == -1) {
        std::vector<Vertex> order(n);
        for (Vertex v = 0; v < n; ++v)
            order[colour[v]] = v;
        const std::uint64_t code = code_under(g, order);
        if (!have || code > best) {
            best = code;
            have = true;
        }
        return;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (colour[v] != target)
            continue;
        // Individualise v: it keeps colour `target`, the rest of its cell
        // moves just after it.
        std::vector<int> split(n);
        for (Vertex w = 0; w < n; ++w)
            split[w] = 2 * colour[w] + ((colour[w] == target && w != v) ? 1 : 0);
        search(g, refine(g, split), best, have);
    }
}

Graph graph_from_code(int n, std::uint64_t code)
{
    std::vector<Edge> edges;
    int bit = n * (n - 1) / 2 - 1;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, --bit)
            if ((code >> bit) & 1)
                edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

const std::vector<Graph>& all_graphs(int n)
{
    static std::mutex lock;
    static std::map<int, std::vector<Graph>> cache;
    {
        std::scoped_lock guard(lock);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    std::vector<Graph> out;
    if (n == 1) {
        out.push_back(Graph::from_edges(1, {}));
    } else {
        const std::vector<Graph>& prev = all_graphs(n - 1);
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::uint64_t> codes;
        for (const Graph& base : prev) {
            const std::vector<Edge> base_edges = base.edges();
            for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                std::vector<Edge> edges = base_edges;
                for (int u = 0; u < n - 1; ++u)
                    if ((mask >> u) & 1)
                        edges.emplace_back(u, n - 1);
                const std::uint64_t code = canonical_code(Graph::from_edges(n, edges));
                if (seen.insert(code).second)
                    codes.push_back(code);
            }
        }
        std::sort(codes.begin(), codes.end());
        out.reserve(codes.size());
        for (std::uint64_t c : codes)
            out.push_back(graph_from_code(n, c));
    }
    std::scoped_lock guard(lock);
    return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g)
{
    if (g.order() > kMaxCanonicalOrder)
        throw SizeError("canonical form supports n <= " + std::to_string(kMaxCanonicalOrder));
    std::vector<int> colour(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        colour[v] = g.degree(v);
    std::uint64_t best = 0;
    bool have = false;
    search(g, refine(g, colour), best, have);
    return best;
}

Graph canonical_form(const Graph& g)
{
    return graph_from_code(g.order(), canonical_code(g));
}

std::vector<Graph> enumerate_small_graphs(int n, bool connected)
{
    if (n < 1)
        throw SizeError("enumeration needs n >= 1");
    if (n > kMaxEnumerationOrder)
        throw SizeError("internal enumeration is limited to n <= 8; supply a graph6 file "
                        "(e.g. from geng) for n = " + std::to_string(n));
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(n))
        if (!connected || is_connected(g))
            out.push_back(g);
    return out;
}

Graph random_graph(int n, double p, std::uint64_t seed)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < p)
                edges.emplace_back(i, j);
        }
    return Graph::from_edges(n, edges);
}

}  // namespace domlab
