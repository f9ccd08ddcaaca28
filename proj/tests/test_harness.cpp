#include "domlab/enumerate.hpp"
#include "domlab/errors.hpp"
#include "domlab/families.hpp"
#include "domlab/graph_io.hpp"
#include "domlab/sweep.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace domlab;
using namespace domlab::harness;

namespace {

std::string run_to_string(const SweepConfig& cfg, SweepSummary* summary = nullptr)
{
    std::ostringstream out;
    const SweepSummary s = sweep(cfg, [&](const InstanceReport& r) { out << to_json(r).dump() << '\n'; });
    if (summary)
        *summary = s;
    return out.str();
}

}  // namespace

TEST_CASE("enumeration counts")
{
    const int all[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
    const int connected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) {
        CHECK(enumerate_small_graphs(n, false).size() == static_cast<std::size_t>(all[n - 1]));
        CHECK(enumerate_small_graphs(n, true).size() == static_cast<std::size_t>(connected[n - 1]));
    }
    std::set<std::string> p3_k3;
    for (const Graph& g : enumerate_small_graphs(3, true))
        p3_k3.insert(write_graph6(canonical_form(g)));
    CHECK(p3_k3 == std::set<std::string>{write_graph6(canonical_form(families::path(3))),
                                         write_graph6(canonical_form(families::complete(3)))});
    CHECK_THROWS_AS(enumerate_small_graphs(9, true), SizeError);
}

TEST_CASE("canonical form is a relabelling invariant")
{
    const Graph p = families::petersen();
    const std::vector<Vertex> perm{3, 7, 1, 0, 9, 2, 8, 5, 4, 6};
    CHECK(canonical_code(relabel(p, perm)) == canonical_code(p));
    CHECK(canonical_code(families::path(4)) != canonical_code(families::star(3)));
}

TEST_CASE("random graphs")
{
    CHECK(random_graph(9, 0.0, 5).size() == 0);
    CHECK(random_graph(9, 1.0, 5) == families::complete(9));
    CHECK(write_graph6(random_graph(12, 0.4, 77)) == write_graph6(random_graph(12, 0.4, 77)));
    CHECK(write_graph6(random_graph(12, 0.4, 77)) != write_graph6(random_graph(12, 0.4, 78)));
    CHECK_THROWS_AS(random_graph(5, 1.5, 1), DomainError);
}

TEST_CASE("graph sources")
{
    CHECK(resolve_source("connected:4", 0).size() == 10);
    CHECK(resolve_source("connected:4-4", 0).size() == 6);
    CHECK(resolve_source("connected:1-4", 0).size() == 10);
    CHECK(resolve_source("all:3", 0).size() == 7);
    CHECK(resolve_source("g6:A_", 0).front() == families::complete(2));
    const auto r1 = resolve_source("random:5:6-9:0.5", 11);
    const auto r2 = resolve_source("random:5:6-9:0.5", 11);
    REQUIRE(r1.size() == 5);
    for (std::size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i] == r2[i]);
        CHECK(r1[i].order() >= 6);
        CHECK(r1[i].order() <= 9);
    }
    CHECK_THROWS_AS(resolve_source("connected:x", 0), ParseError);
    CHECK_THROWS_AS(resolve_source("/no/such/file", 0), ParseError);
    CHECK(graph_id(families::path(70)).starts_with("edges:70:"));
}

TEST_CASE("single instance")
{
    SweepConfig cfg;
    const InstanceReport r = run_instance(families::cycle(4), families::complete(2), cfg, 0);
    CHECK(r.status == Status::ok);
    CHECK(r.values.at("gamma(G)").value == 2);
    CHECK(r.values.at("gamma(H)").value == 1);
    CHECK(r.values.at("gammaw{2}(GxH)").value >= 2);
    CHECK(r.g_claw_free);
    REQUIRE(r.labeling);
    CHECK(r.labeling->passed);
    CHECK(r.labeling->agrees_with_solver);
    for (const InequalityOutcome& o : r.inequalities)
        CHECK(o.holds);

    const auto j = to_json(r);
    CHECK(j["g"] == "Cl");
    CHECK(j["status"] == "ok");
    CHECK(j.contains("values"));
    CHECK(j.contains("inequalities"));
    CHECK_FALSE(j.contains("elapsed_ms"));

    SweepConfig capped;
    capped.vertex_cap = 6;
    const InstanceReport s = run_instance(families::cycle(4), families::complete(2), capped, 3);
    CHECK(s.status == Status::skipped);
    CHECK_FALSE(s.skip_reason.empty());
    CHECK(to_json(s)["status"] == "skipped");
}

TEST_CASE("sweep accounting and determinism")
{
    SweepConfig cfg;
    cfg.source_g = "connected:2-4";
    cfg.source_h = "connected:1-3";
    cfg.claw_free_filter = true;
    SweepSummary one;
    SweepSummary four;
    const std::string a = run_to_string(cfg, &one);
    cfg.jobs = 4;
    const std::string b = run_to_string(cfg, &four);
    CHECK(a == b);
    CHECK(one.exit_code() == 0);
    CHECK(one.emitted == one.pairs_total);
    CHECK(one.reported + one.skipped == one.emitted);
    CHECK(std::count(a.begin(), a.end(), '\n') == static_cast<long>(one.emitted));

    cfg.vertex_cap = 8;
    SweepSummary capped;
    run_to_string(cfg, &capped);
    CHECK(capped.skipped > 0);
    CHECK(capped.reported + capped.skipped == capped.pairs_total);
    CHECK(capped.exit_code() == 3);

    SweepConfig bad;
    bad.k = 0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("claw-free graphs have equal domination and independent domination numbers")
{
    const AllanLaskarReport r = verify_allan_laskar(6);
    CHECK(r.passed());
    CHECK(r.connected_by_order.at(4) == 6);
    CHECK(r.claw_free_by_order.at(4) == 5);
    CHECK(r.graphs_checked > 0);
    CHECK(gamma(families::cycle(6)).value == 2);
    CHECK(independent_gamma(families::cycle(6)).value == 2);
    CHECK_FALSE(is_claw_free(families::star(3)));
}
