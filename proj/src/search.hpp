#pragma once

// Internal search engines behind the domination solvers.

#include "domlab/domination.hpp"
#include "domlab/errors.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace domlab::detail {

class SearchControl {
public:
    explicit SearchControl(std::optional<std::chrono::steady_clock::time_point> deadline)
        : deadline_(deadline)
    {
    }

    void tick()
    {
        if ((++nodes_ & 0x3ff) == 0 && deadline_ && std::chrono::steady_clock::now() > *deadline_)
            throw BudgetExceeded("search time budget exceeded after " +
                                 std::to_string(nodes_) + " nodes");
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::uint64_t nodes_ = 0;
};

/// Feasibility rule for a vector f : V -> {0..max_value}.
struct LexProblem {
    enum class Coverage {
        every_vertex,  // closed-neighbourhood sum >= need at every vertex
        zero_vertices, // ... only at vertices with f(v) = 0
    };
    Coverage coverage = Coverage::every_vertex;
    int need = 1;
    int max_value = 1;
    bool independent = false;  // support must be an independent set
};

/// Depth-first search over vertices in index order, values tried from
/// max_value down to 0, pruned by a packing lower bound.
///
/// Without a target: returns a minimum-weight feasible vector; among the
/// minima it is the lexicographically greatest (the first met in DFS order).
/// With a target equal to the optimum: returns the lexicographically
/// greatest feasible vector of that weight, or nullopt if none exists.
std::optional<std::vector<int>> lex_search(const Graph& g, const LexProblem& problem,
                                           std::optional<int> target, SearchControl& control);

enum class SetKind { dominating, independent_dominating, two_dominating };

/// Minimum cardinality for a set invariant. Vertices are processed in
/// descending-degree order; each node branches on the closed neighbourhood
/// of the first uncovered vertex, pruned with packing and cover bounds.
int set_branch_and_bound(const Graph& g, SetKind kind, SearchControl& control);

}  // namespace domlab::detail
