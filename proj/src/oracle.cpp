#include "domlab/oracle.hpp"

#include "domlab/errors.hpp"

#include <limits>

namespace domlab {

namespace {

bool set_feasible(const Graph& g, Invariant which, const VertexSet& s)
{
    switch (which) {
    case Invariant::gamma: return is_dominating(g, s);
    case Invariant::independent_gamma: return is_independent_dominating(g, s);
    default: return is_2_dominating(g, s);
    }
}

InvariantResult oracle_sets(const Graph& g, Invariant which, const OracleOptions& opts)
{
    const int n = g.order();
    if (n > opts.set_vertex_limit)
        throw SizeError("oracle: set enumeration limited to n <= " +
                        std::to_string(opts.set_vertex_limit) + ", got " + std::to_string(n));
    for (int size = 0; size <= n; ++size) {
        // Combinations of `size` vertices in lexicographic order.
        std::vector<Vertex> pick(size);
        for (int i = 0; i < size; ++i)
            pick[i] = i;
        while (true) {
            const VertexSet s(n, pick);
            if (set_feasible(g, which, s)) {
                InvariantResult r;
                r.which = which;
                r.k = 1;
                r.value = size;
                r.certificate = s;
                r.method = Method::brute_force;
                return r;
            }
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    throw InternalError("oracle: no feasible set, which is impossible for V(G)");
}

InvariantResult oracle_functions(const Graph& g, Invariant which, int k, const OracleOptions& opts)
{
    const int n = g.order();
    std::uint64_t states = 1;
    for (int i = 0; i < n; ++i) {
        states *= static_cast<std::uint64_t>(k) + 1;
        if (states > opts.function_state_budget)
            throw SizeError("oracle: (k+1)^n exceeds the state budget of " +
                            std::to_string(opts.function_state_budget));
    }

    // Odometer from (k,...,k) down to (0,...,0), last coordinate fastest.
    std::vector<int> values(n, k);
    int weight = n * k;
    int best_weight = std::numeric_limits<int>::max();
    std::vector<int> best;
    while (true) {
        if (weight < best_weight) {
            const WeightFunction f(k, values);
            const bool ok = which == Invariant::gamma_k ? is_k_dominating_fn(g, f)
                                                        : is_weak_k_dominating_fn(g, f);
            if (ok) {
                best_weight = weight;
                best = values;
            }
        }
        int i = n - 1;
        while (i >= 0 && values[i] == 0) {
            values[i] = k;
            weight += k;
            --i;
        }
        if (i < 0)
            break;
        --values[i];
        --weight;
    }
    InvariantResult r;
    r.which = which;
    r.k = k;
    r.value = best_weight;
    r.certificate = WeightFunction(k, std::move(best));
    r.method = Method::brute_force;
    return r;
}

}  // namespace

InvariantResult oracle_brute_force(const Graph& g, Invariant which, int k, const OracleOptions& opts)
{
    if (is_set_invariant(which))
        return oracle_sets(g, which, opts);
    if (k < 1)
        throw DomainError("k must be >= 1, got " + std::to_string(k));
    return oracle_functions(g, which, k, opts);
}

}  // namespace domlab
