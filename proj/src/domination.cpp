#include "domlab/domination.hpp"

#include "domlab/errors.hpp"
#include "domlab/oracle.hpp"
#include "search.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace domlab {

WeightFunction::WeightFunction(int k, std::vector<int> values) : k_(k), values_(std::move(values))
{
    if (k < 1)
        throw DomainError("weight function bound k must be >= 1, got " + std::to_string(k));
    for (int x : values_) {
        if (x < 0 || x > k)
            throw DomainError("weight " + std::to_string(x) + " outside 0.." + std::to_string(k));
        weight_ += x;
    }
}

WeightFunction WeightFunction::indicator(const VertexSet& s, int k, int value)
{
    std::vector<int> v(s.universe(), 0);
    s.for_each([&](Vertex x) { v[x] = value; });
    return WeightFunction(k, std::move(v));
}

int WeightFunction::at(Vertex v) const
{
    if (v < 0 || v >= order())
        throw GraphError("weight function has no vertex " + std::to_string(v));
    return values_[v];
}

VertexSet WeightFunction::support() const
{
    VertexSet s(order());
    for (Vertex v = 0; v < order(); ++v)
        if (values_[v] > 0)
            s.insert(v);
    return s;
}

std::string WeightFunction::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values_.size(); ++i)
        os << (i ? "," : "") << values_[i];
    os << ')';
    return os.str();
}

std::string_view to_string(Invariant which)
{
    switch (which) {
    case Invariant::gamma: return "gamma";
    case Invariant::independent_gamma: return "i";
    case Invariant::gamma2: return "gamma2";
    case Invariant::gamma_k: return "gammak";
    case Invariant::gamma_weak_k: return "gammawk";
    }
    return "?";
}

std::string_view to_string(Method method)
{
    return method == Method::branch_and_bound ? "branch-and-bound" : "brute-force";
}

Invariant parse_invariant(std::string_view text)
{
    if (text == "gamma") return Invariant::gamma;
    if (text == "i") return Invariant::independent_gamma;
    if (text == "gamma2") return Invariant::gamma2;
    if (text == "gammak" || text == "gamma_k") return Invariant::gamma_k;
    if (text == "gammawk" || text == "gamma_weak_k") return Invariant::gamma_weak_k;
    throw DomainError("unknown invariant '" + std::string(text) + "'");
}

bool is_set_invariant(Invariant which)
{
    return which == Invariant::gamma || which == Invariant::independent_gamma ||
           which == Invariant::gamma2;
}

namespace {

void check_universe(const Graph& g, int universe)
{
    if (universe != g.order())
        throw GraphError("set/function size " + std::to_string(universe) +
                         " does not match graph order " + std::to_string(g.order()));
}

int closed_sum(const Graph& g, const WeightFunction& f, Vertex v)
{
    int s = f.at(v);
    g.neighbors(v).for_each([&](Vertex u) { s += f.at(u); });
    return s;
}

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& s)
{
    check_universe(g, s.universe());
    for (Vertex v = 0; v < g.order(); ++v)
        if (!s.contains(v) && !g.neighbors(v).intersects(s))
            return false;
    return true;
}

bool is_independent_dominating(const Graph& g, const VertexSet& s)
{
    return is_dominating(g, s) && is_independent(g, s);
}

bool is_2_dominating(const Graph& g, const VertexSet& s)
{
    check_universe(g, s.universe());
    for (Vertex v = 0; v < g.order(); ++v)
        if (!s.contains(v) && g.neighbors(v).intersection_count(s) < 2)
            return false;
    return true;
}

bool is_k_dominating_fn(const Graph& g, const WeightFunction& f)
{
    check_universe(g, f.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (closed_sum(g, f, v) < f.k())
            return false;
    return true;
}

bool is_weak_k_dominating_fn(const Graph& g, const WeightFunction& f)
{
    check_universe(g, f.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (f.at(v) == 0 && closed_sum(g, f, v) < f.k())
            return false;
    return true;
}

bool certificate_valid(const Graph& g, const InvariantResult& r)
{
    if (is_set_invariant(r.which)) {
        const auto* s = std::get_if<VertexSet>(&r.certificate);
        if (!s || s->universe() != g.order() || s->count() != r.value)
            return false;
        switch (r.which) {
        case Invariant::gamma: return is_dominating(g, *s);
        case Invariant::independent_gamma: return is_independent_dominating(g, *s);
        default: return is_2_dominating(g, *s);
        }
    }
    const auto* f = std::get_if<WeightFunction>(&r.certificate);
    if (!f || f->order() != g.order() || f->k() != r.k || f->weight() != r.value)
        return false;
    return r.which == Invariant::gamma_k ? is_k_dominating_fn(g, *f)
                                         : is_weak_k_dominating_fn(g, *f);
}

namespace {

detail::LexProblem lex_problem(Invariant which, int k)
{
    using C = detail::LexProblem::Coverage;
    switch (which) {
    case Invariant::gamma: return {C::every_vertex, 1, 1, false};
    case Invariant::independent_gamma: return {C::every_vertex, 1, 1, true};
    case Invariant::gamma2: return {C::zero_vertices, 2, 1, false};
    case Invariant::gamma_k: return {C::every_vertex, k, k, false};
    case Invariant::gamma_weak_k: return {C::zero_vertices, k, k, false};
    }
    throw InternalError("unhandled invariant");
}

detail::SetKind set_kind(Invariant which)
{
    switch (which) {
    case Invariant::independent_gamma: return detail::SetKind::independent_dominating;
    case Invariant::gamma2: return detail::SetKind::two_dominating;
    default: return detail::SetKind::dominating;
    }
}

// Vertices ordered breadth-first from a maximum-degree vertex, so closed
// neighbourhoods get fully decided early in the value search.
std::vector<Vertex> bfs_order(const Graph& g)
{
    std::vector<Vertex> order;
    std::vector<char> seen(g.order(), 0);
    while (static_cast<int>(order.size()) < g.order()) {
        Vertex root = -1;
        for (Vertex v = 0; v < g.order(); ++v)
            if (!seen[v] && (root == -1 || g.degree(v) > g.degree(root)))
                root = v;
        seen[root] = 1;
        std::size_t head = order.size();
        order.push_back(root);
        while (head < order.size()) {
            Vertex v = order[head++];
            g.neighbors(v).for_each([&](Vertex w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
            });
        }
    }
    return order;
}

bool fits_states(int n, int k, std::uint64_t budget)
{
    std::uint64_t states = 1;
    for (int i = 0; i < n; ++i) {
        states *= static_cast<std::uint64_t>(k) + 1;
        if (states > budget)
            return false;
    }
    return true;
}

InvariantResult branch_and_bound(const Graph& g, Invariant which, int k,
                                 detail::SearchControl& control)
{
    const detail::LexProblem problem = lex_problem(which, k);
    int value = 0;
    if (is_set_invariant(which)) {
        value = detail::set_branch_and_bound(g, set_kind(which), control);
    } else {
        const std::vector<Vertex> order = bfs_order(g);
        std::vector<Vertex> perm(g.order());
        for (int pos = 0; pos < g.order(); ++pos)
            perm[order[pos]] = pos;
        auto best = detail::lex_search(relabel(g, perm), problem, std::nullopt, control);
        if (!best)
            throw InternalError("value search found no feasible function");
        value = std::accumulate(best->begin(), best->end(), 0);
    }

    auto canonical = detail::lex_search(g, problem, value, control);
    if (!canonical)
        throw InternalError("no certificate of optimal value " + std::to_string(value));
    const int weight = std::accumulate(canonical->begin(), canonical->end(), 0);
    if (weight != value)
        throw InternalError("canonical certificate weight " + std::to_string(weight) +
                            " differs from optimum " + std::to_string(value));

    InvariantResult r;
    r.which = which;
    r.k = is_set_invariant(which) ? 1 : k;
    r.value = value;
    r.method = Method::branch_and_bound;
    if (is_set_invariant(which)) {
        VertexSet s(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            if ((*canonical)[v])
                s.insert(v);
        r.certificate = std::move(s);
    } else {
        r.certificate = WeightFunction(k, std::move(*canonical));
    }
    return r;
}

}  // namespace

InvariantResult solve(const Graph& g, Invariant which, int k, const SolverOptions& opts)
{
    if (g.order() > opts.vertex_cap)
        throw SizeError("graph has " + std::to_string(g.order()) + " vertices, solver cap is " +
                        std::to_string(opts.vertex_cap));
    if (!is_set_invariant(which) && k < 1)
        throw DomainError("k must be >= 1, got " + std::to_string(k));

    bool use_oracle = opts.strategy == Strategy::brute_force;
    if (opts.strategy == Strategy::automatic && !is_set_invariant(which))
        use_oracle = fits_states(g.order(), k, opts.small_instance_states);

    InvariantResult r;
    if (use_oracle) {
        r = oracle_brute_force(g, which, k);
    } else {
        detail::SearchControl control(opts.deadline);
        r = branch_and_bound(g, which, k, control);
    }
    if (!certificate_valid(g, r))
        throw InternalError("solver returned an invalid certificate for " +
                            std::string(to_string(which)));
    return r;
}

InvariantResult gamma(const Graph& g, const SolverOptions& opts)
{
    return solve(g, Invariant::gamma, 1, opts);
}

InvariantResult independent_gamma(const Graph& g, const SolverOptions& opts)
{
    return solve(g, Invariant::independent_gamma, 1, opts);
}

InvariantResult gamma2(const Graph& g, const SolverOptions& opts)
{
    return solve(g, Invariant::gamma2, 1, opts);
}

InvariantResult gamma_k(const Graph& g, int k, const SolverOptions& opts)
{
    return solve(g, Invariant::gamma_k, k, opts);
}

InvariantResult gamma_weak_k(const Graph& g, int k, const SolverOptions& opts)
{
    return solve(g, Invariant::gamma_weak_k, k, opts);
}

std::string certificate_to_string(const Certificate& c)
{
    if (const auto* s = std::get_if<VertexSet>(&c))
        return s->to_string();
    return std::get<WeightFunction>(c).to_string();
}

}  // namespace domlab
