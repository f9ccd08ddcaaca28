#include "domlab/enumerate.hpp"
#include "domlab/errors.hpp"
#include "domlab/families.hpp"
#include "domlab/graph.hpp"
#include "domlab/graph_io.hpp"
#include "domlab/product.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

using namespace domlab;

namespace {

Graph claw() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }
Graph c4() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

bool isomorphic_brute_force(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    std::vector<Vertex> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!b.adjacent(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool has_induced_claw_brute_force(const Graph& g)
{
    const int n = g.order();
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int d = b + 1; d < n; ++d) {
                    if (c == a || c == b || c == d)
                        continue;
                    if (g.adjacent(c, a) && g.adjacent(c, b) && g.adjacent(c, d) && !g.adjacent(a, b) &&
                        !g.adjacent(a, d) && !g.adjacent(b, d))
                        return true;
                }
    return false;
}

}  // namespace

TEST_CASE("vertex sets")
{
    VertexSet s(70, {0, 2, 65});
    CHECK(s.count() == 3);
    CHECK(s.contains(65));
    CHECK_FALSE(s.contains(64));
    CHECK(s.members() == std::vector<Vertex>{0, 2, 65});
    CHECK(s.to_string() == "{0,2,65}");
    CHECK(s.next(2) == 65);
    CHECK((s & VertexSet(70, {2, 3})) == VertexSet(70, {2}));
    CHECK((s - VertexSet(70, {0})).count() == 2);
    CHECK(VertexSet::full(70).count() == 70);
    CHECK_THROWS_AS(s.insert(70), GraphError);
    CHECK_THROWS_AS(s |= VertexSet(5), GraphError);
}

TEST_CASE("from_edges")
{
    const Graph k2 = Graph::from_edges(2, {{0, 1}});
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);
    CHECK(k2.adjacent(1, 0));
    const Graph g = c4();
    CHECK(g.size() == 4);
    CHECK(g == families::cycle(4));
    CHECK(claw() == families::star(3));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(0, {}), GraphError);
    CHECK_THROWS_AS(g.neighbors(4), GraphError);
}

TEST_CASE("graph6")
{
    const Graph k2 = parse_graph6("A_");
    CHECK(k2 == families::complete(2));
    CHECK(parse_graph6("D??") == families::empty(5));
    CHECK(parse_graph6("@") == families::empty(1));
    CHECK(write_graph6(families::complete(2)) == "A_");
    CHECK(write_graph6(families::empty(5)) == "D??");
    CHECK(parse_graph6(">>graph6<<A_\n") == k2);

    for (const Graph& g : {families::petersen(), families::cycle(7), families::hypercube(3), claw(),
                           families::complete(9), families::path(62)})
        CHECK(parse_graph6(write_graph6(g)) == g);
    // columns-first upper triangle: bits x01 x02 x12 for K3 minus edge 12
    CHECK(write_graph6(Graph::from_edges(3, {{0, 1}, {0, 2}})) == "Bo");

    CHECK_THROWS_AS(parse_graph6("A "), ParseError);
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);
    CHECK_THROWS_AS(parse_graph6("A_?"), ParseError);
    CHECK_THROWS_AS(parse_graph6("A`"), ParseError);  // nonzero padding
    CHECK_THROWS_AS(parse_graph6("~??~"), ParseError);
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(write_graph6(families::path(63)), SizeError);
}

TEST_CASE("edge list io")
{
    std::stringstream ss;
    write_edge_list(ss, families::petersen());
    CHECK(read_edge_list(ss) == families::petersen());
    std::istringstream bad("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(bad), ParseError);
    std::istringstream g6s("A_\n\nBw\n");
    CHECK(read_graphs(g6s).size() == 2);
}

TEST_CASE("neighbourhoods")
{
    const Graph g = c4();
    CHECK(open_nbhd(g, 0) == VertexSet(4, {1, 3}));
    CHECK(closed_nbhd(g, 0) == VertexSet(4, {0, 1, 3}));
    CHECK(open_nbhd(claw(), 0) == VertexSet(4, {1, 2, 3}));
    const Graph iso = families::empty(3);
    CHECK(open_nbhd(iso, 1).empty());
    CHECK(closed_nbhd(iso, 1) == VertexSet(3, {1}));
    CHECK_THROWS_AS(open_nbhd(g, 9), GraphError);
}

TEST_CASE("private neighbourhood")
{
    const Graph p3 = families::path(3);
    CHECK(private_nbhd(p3, 1, VertexSet(3, {1})) == VertexSet(3, {0, 2}));
    CHECK(private_nbhd(c4(), 0, VertexSet(4, {0, 2})).empty());
    CHECK(private_nbhd(claw(), 0, VertexSet(4, {0})) == VertexSet(4, {1, 2, 3}));
    CHECK_THROWS_AS(private_nbhd(p3, 0, VertexSet(3, {1})), GraphError);

    // every member of pn(v, S) has v as its only S-neighbour
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_small_graphs(n, false))
            for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
                std::vector<Vertex> members;
                for (int v = 0; v < n; ++v)
                    if (mask >> v & 1U)
                        members.push_back(v);
                const VertexSet s(n, members);
                for (Vertex v : members)
                    private_nbhd(g, v, s).for_each([&](Vertex u) {
                        CHECK((open_nbhd(g, u) & s) == VertexSet(n, {v}));
                    });
            }
}

TEST_CASE("independence")
{
    CHECK(is_independent(c4(), VertexSet(4, {0, 2})));
    CHECK_FALSE(is_independent(families::complete(2), VertexSet(2, {0, 1})));
    CHECK(is_independent(families::petersen(), VertexSet(10)));
}

TEST_CASE("claw-freeness")
{
    CHECK_FALSE(is_claw_free(claw()));
    for (int n = 3; n <= 12; ++n)
        CHECK(is_claw_free(families::cycle(n)));
    CHECK_FALSE(is_claw_free(families::petersen()));
    CHECK(is_claw_free(families::complete(6)));

    for (int n = 1; n <= 8; ++n)
        for (const Graph& g : enumerate_small_graphs(n, false))
            REQUIRE(is_claw_free(g) == !has_induced_claw_brute_force(g));
}

TEST_CASE("cartesian product")
{
    CHECK(isomorphic_brute_force(cartesian_product(families::complete(2), families::complete(2)), c4()));
    const Graph ladder = cartesian_product(families::complete(2), families::path(3));
    CHECK(ladder.order() == 6);
    CHECK(ladder.size() == 7);
    const Graph q3 = cartesian_product(c4(), families::complete(2));
    CHECK(q3.order() == 8);
    CHECK(q3.size() == 12);
    CHECK(isomorphic_brute_force(q3, families::hypercube(3)));

    const CartesianProduct p(families::path(3), families::cycle(4));
    CHECK(p.flat({2, 1}) == 9);
    CHECK(p.coords(9) == ProductVertex{2, 1});
    // (g,h) ~ (g',h') iff one coordinate is equal and the other adjacent
    for (Vertex a = 0; a < 12; ++a)
        for (Vertex b = 0; b < 12; ++b) {
            auto [g1, h1] = p.coords(a);
            auto [g2, h2] = p.coords(b);
            const bool expect = (g1 == g2 && p.factor_h().adjacent(h1, h2)) ||
                                (h1 == h2 && p.factor_g().adjacent(g1, g2));
            CHECK(p.graph().adjacent(a, b) == expect);
        }
    CHECK_THROWS_AS(cartesian_product(families::path(70), families::path(70)), SizeError);
    CHECK_NOTHROW(cartesian_product(families::path(64), families::path(64)));
}

TEST_CASE("structural helpers")
{
    CHECK(is_connected(families::petersen()));
    CHECK_FALSE(is_connected(families::empty(2)));
    const Graph u = disjoint_union(families::path(2), families::cycle(3));
    CHECK(u.order() == 5);
    CHECK(u.size() == 4);
    CHECK(induced_subgraph(families::cycle(5), VertexSet(5, {0, 1, 2})) == families::path(3));
    const std::vector<Vertex> perm{2, 0, 1};
    CHECK(relabel(families::path(3), perm).adjacent(2, 0));
}
