#pragma once

#include "domlab/graph.hpp"
#include "domlab/product.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace domlab {

/// f : V(G) -> {0..k}.
class WeightFunction {
public:
    WeightFunction(int k, std::vector<int> values);
    /// Indicator of `s` scaled by `value` (default 1), with bound k.
    static WeightFunction indicator(const VertexSet& s, int k, int value = 1);

    int k() const noexcept { return k_; }
    int order() const noexcept { return static_cast<int>(values_.size()); }
    int at(Vertex v) const;
    std::span<const int> values() const noexcept { return values_; }
    int weight() const noexcept { return weight_; }
    /// { v : f(v) > 0 }
    VertexSet support() const;

    std::string to_string() const;

    friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

private:
    int k_;
    std::vector<int> values_;
    int weight_ = 0;
};

enum class Invariant { gamma, independent_gamma, gamma2, gamma_k, gamma_weak_k };

enum class Method { branch_and_bound, brute_force };

std::string_view to_string(Invariant which);
std::string_view to_string(Method method);
/// Accepts the CLI spellings gamma | i | gamma2 | gammak | gammawk.
Invariant parse_invariant(std::string_view text);
/// gamma, i and gamma2 are optimised over vertex sets.
bool is_set_invariant(Invariant which);

using Certificate = std::variant<VertexSet, WeightFunction>;

struct InvariantResult {
    Invariant which = Invariant::gamma;
    int k = 1;
    int value = 0;
    Certificate certificate;
    Method method = Method::branch_and_bound;
};

enum class Strategy {
    automatic,         // branch-and-bound, brute force for tiny function searches
    branch_and_bound,
    brute_force,
};

struct SolverOptions {
    int vertex_cap = kDefaultVertexCap;
    Strategy strategy = Strategy::automatic;
    /// Under Strategy::automatic, function invariants whose search space
    /// (k+1)^n is at most this many states go to the brute-force oracle.
    std::uint64_t small_instance_states = 4096;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

bool is_dominating(const Graph& g, const VertexSet& s);
bool is_independent_dominating(const Graph& g, const VertexSet& s);
bool is_2_dominating(const Graph& g, const VertexSet& s);
bool is_k_dominating_fn(const Graph& g, const WeightFunction& f);
bool is_weak_k_dominating_fn(const Graph& g, const WeightFunction& f);

/// Checks that the certificate is feasible for the invariant and that its
/// cardinality or weight equals the reported value.
bool certificate_valid(const Graph& g, const InvariantResult& r);

// Exact solvers. Among optimal certificates the lexicographically least
// one is returned: as a sorted vertex sequence for sets, and as the sorted
// multiset sequence (v repeated f(v) times) for functions.
InvariantResult gamma(const Graph& g, const SolverOptions& opts = {});
InvariantResult independent_gamma(const Graph& g, const SolverOptions& opts = {});
InvariantResult gamma2(const Graph& g, const SolverOptions& opts = {});
InvariantResult gamma_k(const Graph& g, int k, const SolverOptions& opts = {});
InvariantResult gamma_weak_k(const Graph& g, int k, const SolverOptions& opts = {});

InvariantResult solve(const Graph& g, Invariant which, int k = 1, const SolverOptions& opts = {});

std::string certificate_to_string(const Certificate& c);

}  // namespace domlab
