#pragma once

#include "domlab/domination.hpp"

#include <cstdint>

namespace domlab {

struct OracleOptions {
    int set_vertex_limit = 24;
    std::uint64_t function_state_budget = 100'000'000;
};

/// Exhaustive reference solver. Sets are enumerated by increasing size,
/// each size in lexicographic order of the sorted member sequence; weight
/// functions are enumerated as value vectors in decreasing lexicographic
/// order. The first optimum met is returned, so certificates coincide with
/// the branch-and-bound solvers' tie-breaking.
InvariantResult oracle_brute_force(const Graph& g, Invariant which, int k = 1,
                                   const OracleOptions& opts = {});

}  // namespace domlab
