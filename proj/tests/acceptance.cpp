// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include "domlab/domination.hpp"
#include "domlab/enumerate.hpp"
#include "domlab/errors.hpp"
#include "domlab/families.hpp"
#include "domlab/graph_io.hpp"
#include "domlab/labeling.hpp"
#include "domlab/oracle.hpp"
#include "domlab/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace domlab;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body)
{
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > limit_s) {
        o.pass = false;
        o.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + " s limit)";
    }
    if (!o.pass)
        ++failures;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f s", secs);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ". " << title << ": " << o.detail << " [" << buf
              << "]" << std::endl;
}

std::vector<Graph> connected_up_to(int n)
{
    std::vector<Graph> out;
    for (int i = 1; i <= n; ++i)
        for (const Graph& g : enumerate_small_graphs(i, true))
            out.push_back(g);
    return out;
}

SolverOptions bnb_only()
{
    SolverOptions so;
    so.strategy = Strategy::branch_and_bound;
    return so;
}

struct Chain {
    int gamma, w2, k2, g2;
};

Chain chain_values(const Graph& g)
{
    const SolverOptions so = bnb_only();
    return {gamma(g, so).value, gamma_weak_k(g, 2, so).value, gamma_k(g, 2, so).value, gamma2(g, so).value};
}

bool chain_holds(const Chain& c)
{
    return c.gamma <= c.w2 && c.w2 <= c.k2 && c.k2 <= 2 * c.gamma && c.w2 <= c.g2;
}

// Criteria 4-6 and 8 share one sweep configuration.
harness::SweepConfig product_sweep_config(int jobs)
{
    harness::SweepConfig cfg;
    cfg.source_g = "connected:1-5";
    cfg.source_h = "connected:1-4";
    cfg.claw_free_filter = true;
    cfg.k = 2;
    cfg.keep_going = true;
    cfg.jobs = jobs;
    return cfg;
}

struct SweepRun {
    harness::SweepSummary summary;
    std::vector<harness::InstanceReport> reports;
    std::string jsonl;
};

SweepRun run_product_sweep(int jobs)
{
    SweepRun run;
    std::ostringstream out;
    run.summary = harness::sweep(product_sweep_config(jobs), [&](const harness::InstanceReport& r) {
        out << harness::to_json(r).dump() << '\n';
        run.reports.push_back(r);
    });
    run.jsonl = out.str();
    return run;
}

const harness::InequalityOutcome* find_inequality(const harness::InstanceReport& r, const std::string& invariant)
{
    for (const auto& o : r.inequalities)
        if (o.invariant == invariant)
            return &o;
    return nullptr;
}

Outcome product_inequality(const SweepRun& run, const std::vector<std::string>& invariants)
{
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::size_t missing = 0;
    for (const auto& r : run.reports) {
        if (r.status == harness::Status::skipped) {
            ++missing;
            continue;
        }
        for (const auto& inv : invariants) {
            const auto* o = find_inequality(r, inv);
            if (!o) {
                ++missing;
                continue;
            }
            ++checked;
            if (!o->holds)
                ++violations;
        }
    }
    std::ostringstream d;
    d << run.reports.size() << " pairs, " << checked << " inequality checks, " << violations << " violations";
    if (missing)
        d << ", " << missing << " missing or skipped";
    return {violations == 0 && missing == 0 && !run.reports.empty(), d.str()};
}

}  // namespace

int main()
{
    std::cout << "acceptance run" << std::endl;

    criterion(1, "branch-and-bound equals the brute-force oracle (connected n <= 7, all five invariants)", 300,
              [] {
                  std::size_t checks = 0;
                  std::size_t mismatches = 0;
                  std::string first;
                  const SolverOptions so = bnb_only();
                  for (const Graph& g : connected_up_to(7)) {
                      for (Invariant which : {Invariant::gamma, Invariant::independent_gamma, Invariant::gamma2,
                                              Invariant::gamma_k, Invariant::gamma_weak_k})
                          for (int k : {1, 2, 3}) {
                              if (is_set_invariant(which) && k > 1)
                                  continue;
                              const InvariantResult a = solve(g, which, k, so);
                              const InvariantResult b = oracle_brute_force(g, which, k);
                              ++checks;
                              if (a.value != b.value ||
                                  certificate_to_string(a.certificate) != certificate_to_string(b.certificate)) {
                                  if (mismatches++ == 0)
                                      first = write_graph6(g) + " " + std::string(to_string(which));
                              }
                          }
                  }
                  std::ostringstream d;
                  d << checks << " comparisons, " << mismatches << " mismatches";
                  if (mismatches)
                      d << " (first: " << first << ")";
                  return Outcome{mismatches == 0, d.str()};
              });

    criterion(2, "invariant chain on connected n <= 7 and 10000 seeded random graphs n <= 12", 600, [] {
        std::size_t checked = 0;
        std::size_t violations = 0;
        for (const Graph& g : connected_up_to(7)) {
            ++checked;
            if (!chain_holds(chain_values(g)))
                ++violations;
        }
        std::mt19937_64 rng(20240611);
        std::uniform_int_distribution<int> order(1, 12);
        std::uniform_int_distribution<int> tenths(1, 9);
        for (int i = 0; i < 10000; ++i) {
            const int n = order(rng);
            const double p = tenths(rng) / 10.0;
            ++checked;
            if (!chain_holds(chain_values(random_graph(n, p, rng()))))
                ++violations;
        }
        std::ostringstream d;
        d << checked << " graphs, " << violations << " violations";
        return Outcome{violations == 0 && checked == 10000 + connected_up_to(7).size(), d.str()};
    });

    criterion(3, "domination equals independent domination on connected claw-free n <= 8", 600, [] {
        const harness::AllanLaskarReport r = harness::verify_allan_laskar(8);
        std::ostringstream d;
        d << r.graphs_checked << " claw-free graphs, " << r.mismatches.size() << " mismatches, "
          << r.observation_violations.size() << " S-neighbour count violations";
        return Outcome{r.passed() && r.graphs_checked > 0, d.str()};
    });

    SweepRun base;
    bool base_ok = true;
    std::string base_error;
    const auto t0 = Clock::now();
    try {
        base = run_product_sweep(1);
    } catch (const std::exception& e) {
        base_ok = false;
        base_error = e.what();
    }
    const double base_secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << "product sweep (claw-free G, n <= 5) x (H, n <= 4): " << base.reports.size() << " pairs in "
              << static_cast<int>(base_secs) << " s" << std::endl;

    criterion(4, "weak {2}-domination of G□H is at least gamma(G)gamma(H)", 1800 - base_secs, [&] {
        if (!base_ok)
            return Outcome{false, "sweep failed: " + base_error};
        return product_inequality(base, {"gammaw{2}(GxH)"});
    });

    criterion(5, "{2}-domination and 2-domination of G□H are at least gamma(G)gamma(H)", 60, [&] {
        if (!base_ok)
            return Outcome{false, "sweep failed: " + base_error};
        return product_inequality(base, {"gamma{2}(GxH)", "gamma2(GxH)"});
    });

    criterion(6, "labelling pipeline: claims 1 and 2 and the count on every pair", 60, [&] {
        if (!base_ok)
            return Outcome{false, "sweep failed: " + base_error};
        std::size_t pipelines = 0;
        std::size_t failed = 0;
        std::size_t disagree = 0;
        std::size_t discrepancies = 0;
        std::size_t unreplayable = 0;
        std::size_t open_after = 0;
        for (const auto& r : base.reports) {
            if (!r.labeling) {
                ++failed;
                continue;
            }
            const auto& l = *r.labeling;
            ++pipelines;
            open_after += l.open_after_fixpoint > 0;
            if (!l.passed)
                ++failed;
            if (!l.agrees_with_solver)
                ++disagree;
            if (r.status == harness::Status::discrepancy) {
                ++discrepancies;
                try {
                    std::vector<labeling::TraceRecord> trace;
                    for (const std::string& line : l.trace)
                        trace.push_back(labeling::parse_trace_record(line));
                    labeling::ContextOptions co;
                    auto ctx = labeling::build_context(harness::resolve_source("g6:" + r.g_id, 0).front(),
                                                       harness::resolve_source("g6:" + r.h_id, 0).front(), co);
                    labeling::replay(ctx, trace);
                } catch (const std::exception&) {
                    ++unreplayable;
                }
            }
        }
        std::ostringstream d;
        d << pipelines << " pipelines, " << failed << " failed, " << disagree << " disagree with the solver, "
          << discrepancies << " discrepancies (" << unreplayable << " not replayable), " << open_after
          << " needed claim-1 search";
        return Outcome{pipelines == base.reports.size() && pipelines > 0 && failed == 0 && disagree == 0 &&
                           discrepancies == 0 && unreplayable == 0,
                       d.str()};
    });

    criterion(7, "spot values, each confirmed by the oracle", 60, [] {
        struct Spot {
            std::string name;
            Graph g;
            Invariant which;
            int k;
            int expected;
        };
        std::vector<Spot> spots{
            {"gamma{2}(C4)", families::cycle(4), Invariant::gamma_k, 2, 3},
            {"gammaw{2}(C4)", families::cycle(4), Invariant::gamma_weak_k, 2, 2},
            {"gamma2(C4)", families::cycle(4), Invariant::gamma2, 1, 2},
        };
        for (int n = 1; n <= 12; ++n)
            spots.push_back({"gamma(P" + std::to_string(n) + ")", families::path(n), Invariant::gamma, 1,
                             (n + 2) / 3});
        for (int n = 2; n <= 6; ++n)
            for (int k = 1; k <= 3; ++k)
                spots.push_back({"gamma{" + std::to_string(k) + "}(K" + std::to_string(n) + ")",
                                 families::complete(n), Invariant::gamma_k, k, k});
        std::size_t bad = 0;
        std::string first;
        for (const Spot& s : spots) {
            const int oracle = oracle_brute_force(s.g, s.which, s.k).value;
            const int solver = solve(s.g, s.which, s.k, bnb_only()).value;
            if (oracle != s.expected || solver != s.expected) {
                if (bad++ == 0)
                    first = s.name + ": expected " + std::to_string(s.expected) + ", oracle " +
                            std::to_string(oracle) + ", solver " + std::to_string(solver);
            }
        }
        std::ostringstream d;
        d << spots.size() << " values, " << bad << " wrong";
        if (bad)
            d << " (first: " << first << ")";
        return Outcome{bad == 0, d.str()};
    });

    criterion(8, "product sweep reports are byte-identical across runs and job counts", 3600, [&] {
        if (!base_ok)
            return Outcome{false, "sweep failed: " + base_error};
        std::ostringstream d;
        bool same = true;
        d << "jobs=1 " << base.jsonl.size() << " bytes";
        for (int jobs : {1, 3, 4}) {
            const SweepRun again = run_product_sweep(jobs);
            const bool eq = again.jsonl == base.jsonl;
            same = same && eq;
            d << "; jobs=" << jobs << (eq ? " identical" : " DIFFERENT");
        }
        return Outcome{same && !base.jsonl.empty(), d.str()};
    });

    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
