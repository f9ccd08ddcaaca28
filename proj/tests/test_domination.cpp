#include "naive_oracle.hpp"

#include "domlab/domination.hpp"
#include "domlab/enumerate.hpp"
#include "domlab/errors.hpp"
#include "domlab/families.hpp"
#include "domlab/oracle.hpp"

#include <doctest.h>

using namespace domlab;

namespace {

Graph c4() { return families::cycle(4); }

const VertexSet& set_of(const InvariantResult& r) { return std::get<VertexSet>(r.certificate); }
const WeightFunction& fn_of(const InvariantResult& r) { return std::get<WeightFunction>(r.certificate); }

SolverOptions bnb_only()
{
    SolverOptions so;
    so.strategy = Strategy::branch_and_bound;
    return so;
}

}  // namespace

TEST_CASE("weight functions")
{
    const WeightFunction f(2, {1, 0, 2});
    CHECK(f.weight() == 3);
    CHECK(f.support() == VertexSet(3, {0, 2}));
    CHECK(f.to_string() == "(1,0,2)");
    CHECK(WeightFunction::indicator(VertexSet(3, {1}), 2, 2).values()[1] == 2);
    CHECK_THROWS_AS(WeightFunction(2, {3}), DomainError);
    CHECK_THROWS_AS(WeightFunction(1, {-1}), DomainError);
    CHECK_THROWS_AS(WeightFunction(0, {0}), DomainError);
}

TEST_CASE("predicates")
{
    const Graph p3 = families::path(3);
    CHECK(is_dominating(p3, VertexSet(3, {1})));
    CHECK_FALSE(is_dominating(p3, VertexSet(3, {0})));
    CHECK(is_dominating(families::petersen(), VertexSet::full(10)));
    CHECK(is_2_dominating(c4(), VertexSet(4, {0, 2})));
    CHECK(is_2_dominating(p3, VertexSet(3, {0, 2})));
    CHECK_FALSE(is_2_dominating(p3, VertexSet(3, {1})));
    CHECK(is_independent_dominating(c4(), VertexSet(4, {0, 2})));
    CHECK_FALSE(is_independent_dominating(c4(), VertexSet(4, {0, 1})));

    CHECK(is_k_dominating_fn(families::complete(2), WeightFunction(2, {1, 1})));
    CHECK(is_k_dominating_fn(c4(), WeightFunction(2, {1, 1, 1, 0})));
    CHECK_FALSE(is_k_dominating_fn(c4(), WeightFunction(2, {1, 0, 1, 0})));
    CHECK(is_weak_k_dominating_fn(c4(), WeightFunction(2, {1, 0, 1, 0})));
    CHECK(is_weak_k_dominating_fn(c4(), WeightFunction(3, {1, 1, 1, 1})));
    CHECK_FALSE(is_weak_k_dominating_fn(c4(), WeightFunction(2, {2, 0, 0, 0})));
    CHECK_THROWS_AS(is_dominating(c4(), VertexSet(5)), GraphError);
}

TEST_CASE("k = 1 functions coincide with dominating sets")
{
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_small_graphs(n, false))
            for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
                VertexSet s(n);
                for (int v = 0; v < n; ++v)
                    if (mask >> v & 1U)
                        s.insert(v);
                const WeightFunction f = WeightFunction::indicator(s, 1);
                REQUIRE(is_k_dominating_fn(g, f) == is_dominating(g, s));
                REQUIRE(is_weak_k_dominating_fn(g, f) == is_dominating(g, s));
            }
}

TEST_CASE("set invariants on small graphs")
{
    const Graph p3 = families::path(3);
    CHECK(gamma(p3).value == 1);
    CHECK(independent_gamma(p3).value == 1);
    CHECK(gamma2(p3).value == 2);
    const Graph c5 = families::cycle(5);
    CHECK(gamma(c5).value == 2);
    CHECK(independent_gamma(c5).value == 2);
    const InvariantResult g2 = gamma2(c4());
    CHECK(g2.value == 2);
    CHECK(set_of(g2) == VertexSet(4, {0, 2}));
    CHECK(gamma(families::petersen()).value == 3);
    CHECK(gamma(families::empty(4)).value == 4);
    CHECK(gamma2(families::empty(4)).value == 4);

    // values derived by the naive oracle
    for (const Graph& g : {p3, c5, c4(), families::petersen(), families::star(4), families::hypercube(3)}) {
        CHECK(gamma(g).value == naive::gamma(g));
        CHECK(independent_gamma(g).value == naive::independent_gamma(g));
        CHECK(gamma2(g).value == naive::gamma2(g));
    }
}

TEST_CASE("function invariants on small graphs")
{
    const InvariantResult k2 = gamma_k(c4(), 2);
    CHECK(k2.value == 3);
    CHECK(fn_of(k2) == WeightFunction(2, {1, 1, 1, 0}));
    const InvariantResult w2 = gamma_weak_k(c4(), 2);
    CHECK(w2.value == 2);
    CHECK(fn_of(w2) == WeightFunction(2, {1, 0, 1, 0}));
    CHECK(naive::min_function(c4(), 2, false) == 3);
    CHECK(naive::min_function(c4(), 2, true) == 2);

    // K1: any f(v) >= 1 makes the weak condition vacuous
    CHECK(naive::min_function(families::complete(1), 2, true) == 1);
    CHECK(gamma_weak_k(families::complete(1), 2).value == 1);
    CHECK(oracle_brute_force(families::complete(1), Invariant::gamma_weak_k, 2).value == 1);

    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= 3; ++k) {
            CHECK(naive::min_function(families::complete(n), k, false) == k);
            CHECK(gamma_k(families::complete(n), k, bnb_only()).value == k);
        }
    CHECK_THROWS_AS(gamma_k(c4(), 0), DomainError);
    CHECK_THROWS_AS(gamma_weak_k(c4(), -1), DomainError);
}

TEST_CASE("k = 1 collapse")
{
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_small_graphs(n, false)) {
            const int gm = gamma(g).value;
            REQUIRE(gamma_k(g, 1, bnb_only()).value == gm);
            REQUIRE(gamma_weak_k(g, 1, bnb_only()).value == gm);
        }
}

TEST_CASE("certificates are valid and tie-break like the oracle")
{
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_small_graphs(n, true))
            for (Invariant which : {Invariant::gamma, Invariant::independent_gamma, Invariant::gamma2,
                                    Invariant::gamma_k, Invariant::gamma_weak_k})
                for (int k : {1, 2, 3}) {
                    if (is_set_invariant(which) && k > 1)
                        continue;
                    const InvariantResult a = solve(g, which, k, bnb_only());
                    const InvariantResult b = oracle_brute_force(g, which, k);
                    REQUIRE(a.method == Method::branch_and_bound);
                    REQUIRE(b.method == Method::brute_force);
                    REQUIRE(certificate_valid(g, a));
                    REQUIRE(a.value == b.value);
                    REQUIRE(certificate_to_string(a.certificate) == certificate_to_string(b.certificate));
                }
}

TEST_CASE("invariant chain")
{
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_small_graphs(n, true)) {
            const int gm = gamma(g).value;
            const int i = independent_gamma(g).value;
            const int g2 = gamma2(g).value;
            const int k2 = gamma_k(g, 2).value;
            const int w2 = gamma_weak_k(g, 2).value;
            REQUIRE(gm <= i);
            REQUIRE(gm <= w2);
            REQUIRE(w2 <= k2);
            REQUIRE(k2 <= 2 * gm);
            REQUIRE(w2 <= g2);
            REQUIRE(gm <= g2);
        }
}

TEST_CASE("values add over components")
{
    const Graph a = families::path(5);
    const Graph b = families::cycle(6);
    const Graph u = disjoint_union(a, b);
    for (Invariant which : {Invariant::gamma, Invariant::independent_gamma, Invariant::gamma2,
                            Invariant::gamma_k, Invariant::gamma_weak_k})
        CHECK(solve(u, which, 2).value == solve(a, which, 2).value + solve(b, which, 2).value);
}

TEST_CASE("limits")
{
    SolverOptions small;
    small.vertex_cap = 5;
    CHECK_THROWS_AS(gamma(families::path(6), small), SizeError);
    OracleOptions tight;
    tight.set_vertex_limit = 5;
    CHECK_THROWS_AS(oracle_brute_force(families::path(6), Invariant::gamma, 1, tight), SizeError);
    tight.function_state_budget = 100;
    CHECK_THROWS_AS(oracle_brute_force(families::path(5), Invariant::gamma_k, 2, tight), SizeError);
    SolverOptions expired;
    expired.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    CHECK_THROWS_AS(gamma_k(families::hypercube(4), 3, expired), BudgetExceeded);
}

TEST_CASE("invariant names")
{
    CHECK(parse_invariant("i") == Invariant::independent_gamma);
    CHECK(parse_invariant("gammawk") == Invariant::gamma_weak_k);
    CHECK(to_string(Invariant::gamma2) == "gamma2");
    CHECK_THROWS_AS(parse_invariant("delta"), DomainError);
}
