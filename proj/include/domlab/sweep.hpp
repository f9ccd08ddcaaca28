#pragma once

#include "domlab/domination.hpp"
#include "domlab/graph.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace domlab::harness {

/// Graph source grammar:
///   connected:N | connected:A-B     enumerated connected graphs, orders A..B (A = 1)
///   all:N | all:A-B                 all enumerated graphs
///   random:COUNT:N:P                COUNT seeded G(n, p) samples, N a single order or A-B
///   g6:STRING                       one literal graph6 graph
///   file:PATH | PATH                graph6 lines or one edge list
/// Random samples derive their seeds from `seed` (SplitMix64 stream).
std::vector<Graph> resolve_source(const std::string& spec, std::uint64_t seed);

/// graph6 string, or "edges:n:u-v,..." for graphs too large for short graph6.
std::string graph_id(const Graph& g);

struct InvariantSelection {
    bool gamma = true;
    bool gamma2 = true;
    bool gamma_k = true;
    bool gamma_weak_k = true;

    /// Comma-separated subset of gamma,gamma2,gamma_k,gamma_weak_k.
    static InvariantSelection parse(const std::string& text);
};

struct SweepConfig {
    std::string source_g;
    std::string source_h;
    bool claw_free_filter = false;
    InvariantSelection invariants;
    int k = 2;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::optional<int> budget_ms;
    int vertex_cap = 4096;
    bool keep_going = false;
    bool run_labeling = true;
    bool timings = false;

    /// Throws DomainError on k < 1, jobs < 1, or non-positive caps.
    void validate() const;
};

struct ValueReport {
    int value = 0;
    Method method = Method::branch_and_bound;
};

struct InequalityOutcome {
    std::string name;
    std::string invariant;  // product invariant on the left-hand side
    int lhs = 0;
    int rhs = 0;            // γ(G)·γ(H)
    bool holds = true;
    bool covered_by_theorem = false;  // G claw-free and the inequality is proven for that case
};

struct LabelingSummary {
    bool passed = false;
    int k = 0;
    int d_size = 0;
    int gamma_h = 0;
    int initial_open = 0;
    int finishing_steps = 0;
    int open_after_fixpoint = 0;
    std::uint64_t assignments_tried = 0;
    std::vector<int> projection_sizes;
    int projection_total = 0;
    bool count_holds = false;
    bool agrees_with_solver = false;
    std::string discrepancy;
    int discrepancy_class = 0;
    std::optional<int> discrepancy_witness;
    std::vector<std::string> trace;  // filled on discrepancy only
};

enum class Status { ok, violation, discrepancy, skipped };

struct InstanceReport {
    std::size_t index = 0;
    std::string g_id;
    std::string h_id;
    Status status = Status::ok;
    std::string skip_reason;
    bool g_claw_free = false;
    int k = 2;
    std::map<std::string, ValueReport> values;
    std::vector<InequalityOutcome> inequalities;
    std::optional<LabelingSummary> labeling;
    std::optional<double> elapsed_ms;
};

std::string_view to_string(Status s);
nlohmann::ordered_json to_json(const InstanceReport& r);

/// All product invariants, inequality checks and (for claw-free G) the
/// labelling pipeline for one pair. Budget and size failures produce a
/// skipped report rather than an exception.
InstanceReport run_instance(const Graph& g, const Graph& h, const SweepConfig& cfg, std::size_t index);

struct SweepSummary {
    std::size_t pairs_total = 0;
    std::size_t emitted = 0;
    std::size_t reported = 0;
    std::size_t skipped = 0;
    std::size_t violations = 0;
    std::size_t discrepancies = 0;
    bool halted = false;

    /// 0 clean, 2 violation or discrepancy, 3 skips from budget/size limits.
    int exit_code() const;
};

using ReportSink = std::function<void(const InstanceReport&)>;

/// Runs every (G, H) pair, G-major, and hands reports to `sink` in pair
/// order whatever the worker count. Stops after the first violation or
/// discrepancy unless keep_going is set.
SweepSummary sweep(const SweepConfig& cfg, const ReportSink& sink);
SweepSummary sweep(const std::vector<Graph>& gs, const std::vector<Graph>& hs,
                   const SweepConfig& cfg, const ReportSink& sink);

struct AllanLaskarReport {
    int n_max = 0;
    std::map<int, int> connected_by_order;
    std::map<int, int> claw_free_by_order;
    int graphs_checked = 0;
    int minimum_sets_checked = 0;  // minimum independent dominating sets inspected
    std::vector<std::string> mismatches;               // γ != i
    std::vector<std::string> observation_violations;   // v ∉ S with 0 or >2 S-neighbours
    bool passed() const { return mismatches.empty() && observation_violations.empty(); }
};

/// γ = i on every connected claw-free graph up to n_max (<= 8), and every
/// vertex outside each minimum independent dominating set has one or two
/// neighbours in it.
AllanLaskarReport verify_allan_laskar(int n_max, const SolverOptions& opts = {});

}  // namespace domlab::harness
