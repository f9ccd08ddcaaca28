// domlab: exact domination invariants, the claw-free labelling pipeline,
// and batch verification sweeps.

#include "domlab/domination.hpp"
#include "domlab/enumerate.hpp"
#include "domlab/errors.hpp"
#include "domlab/graph_io.hpp"
#include "domlab/labeling.hpp"
#include "domlab/oracle.hpp"
#include "domlab/product.hpp"
#include "domlab/sweep.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace domlab;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitNegative = 1;  // clawfree: graph has a claw; other commands: usage/parse error
constexpr int kExitFinding = 2;
constexpr int kExitLimits = 3;

std::optional<int> env_budget_ms()
{
    const char* raw = std::getenv("DOMLAB_BUDGET_MS");
    if (!raw || !*raw)
        return std::nullopt;
    try {
        const int v = std::stoi(raw);
        if (v > 0)
            return v;
    } catch (const std::exception&) {
    }
    throw DomainError(std::string("DOMLAB_BUDGET_MS must be a positive integer, got '") + raw + "'");
}

SolverOptions solver_options(std::optional<int> budget_ms)
{
    SolverOptions so;
    if (auto env = env_budget_ms())
        budget_ms = env;
    if (budget_ms)
        so.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(*budget_ms);
    return so;
}

Graph single_graph(const std::string& spec)
{
    std::vector<Graph> gs = harness::resolve_source(spec, 0);
    if (gs.empty())
        throw ParseError("no graph in '" + spec + "'");
    return gs.front();
}

WeightFunction read_weights(const std::string& path, int order)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::vector<int> values;
    int x = 0;
    while (in >> x)
        values.push_back(x);
    if (!in.eof())
        throw ParseError("weights file: non-integer token");
    if (static_cast<int>(values.size()) != order)
        throw ParseError("weights file has " + std::to_string(values.size()) +
                         " values, product has " + std::to_string(order) + " vertices");
    return WeightFunction(2, std::move(values));
}

std::ostream& open_output(const std::string& path, std::ofstream& file)
{
    if (path.empty() || path == "-")
        return std::cout;
    file.open(path);
    if (!file)
        throw ParseError("cannot write " + path);
    return file;
}

int cmd_invariant(const std::string& file, const std::string& which_text, int k,
                  const std::string& method, std::optional<int> budget)
{
    const Invariant which = parse_invariant(which_text);
    SolverOptions so = solver_options(budget);
    if (method == "bnb")
        so.strategy = Strategy::branch_and_bound;
    else if (method == "oracle")
        so.strategy = Strategy::brute_force;
    for (const Graph& g : harness::resolve_source(file, 0)) {
        const InvariantResult r = solve(g, which, k, so);
        std::cout << harness::graph_id(g) << ' ' << to_string(which);
        if (!is_set_invariant(which))
            std::cout << "{" << k << "}";
        std::cout << '=' << r.value << " certificate=" << certificate_to_string(r.certificate)
                  << " method=" << to_string(r.method) << '\n';
    }
    return kExitClean;
}

int cmd_product(const std::string& fg, const std::string& fh, const std::string& out_path,
                const std::string& format, int cap)
{
    const Graph p = cartesian_product(single_graph(fg), single_graph(fh), cap);
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    const bool edges = format == "edges" || (format == "auto" && p.order() > 62) ||
                       (format == "auto" && out_path.ends_with(".txt"));
    if (edges)
        write_edge_list(out, p);
    else
        out << write_graph6(p) << '\n';
    return kExitClean;
}

int cmd_clawfree(const std::string& file)
{
    bool all = true;
    for (const Graph& g : harness::resolve_source(file, 0)) {
        const bool cf = is_claw_free(g);
        std::cout << harness::graph_id(g) << ' ' << (cf ? "claw-free" : "has-claw") << '\n';
        all = all && cf;
    }
    return all ? kExitClean : kExitNegative;
}

int cmd_filter_clawfree(const std::string& in_path, const std::string& out_path)
{
    std::ifstream in(in_path);
    if (!in)
        throw ParseError("cannot open " + in_path);
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    std::string line;
    long kept = 0;
    long seen = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line.starts_with(">>graph6<<"))
            continue;
        ++seen;
        if (is_claw_free(parse_graph6(line))) {
            out << write_graph6(parse_graph6(line)) << '\n';
            ++kept;
        }
    }
    std::cerr << "kept " << kept << " of " << seen << " graphs\n";
    return kExitClean;
}

void print_pipeline(const labeling::PipelineReport& r)
{
    const auto& ctx = *r.context;
    std::cout << "G=" << harness::graph_id(ctx.g) << " H=" << harness::graph_id(ctx.h) << '\n';
    std::cout << "S=" << ctx.s_set.to_string() << " k=gamma(G)=" << r.k << " gamma(H)=" << r.gamma_h
              << '\n';
    std::cout << "|D|=" << r.d_size << " f=" << ctx.d.weights().to_string() << '\n';
    std::cout << "initial labelling: " << r.initial_open << " two-entry labels\n";
    std::cout << "finishing pass: " << r.finishing_steps << " relabellings, "
              << r.claim1.open_labels << " two-entry labels left\n";
    std::cout << "claim 1 (single-entry labels): " << (r.claim1.success ? "pass" : "FAIL")
              << " after " << r.claim1.assignments_tried << " assignment(s)\n";
    if (r.claim1.success) {
        for (const auto& c : r.claim2.classes)
            std::cout << "  U_" << c.index << "=" << c.projection.to_string()
                      << (c.dominates ? " dominates H" : " does NOT dominate H") << '\n';
        std::cout << "claim 2 (projections dominate H): "
                  << (r.claim2.all_dominate() ? "pass" : "FAIL") << '\n';
        std::cout << "count: |D|=" << r.d_size << " >= sum|U_i|=" << r.projection_total
                  << " >= k*gamma(H)=" << r.k * r.gamma_h << ": "
                  << (r.count_holds ? "pass" : "FAIL") << '\n';
    } else if (r.claim1.discrepancy) {
        const auto& d = *r.claim1.discrepancy;
        std::cout << "DISCREPANCY: " << d.reason << " (class " << d.class_index;
        if (d.witness)
            std::cout << ", uncovered h=" << *d.witness;
        std::cout << ")\n";
    }
}

int cmd_label(const std::string& fg, const std::string& fh, const std::string& trace_path,
              const std::string& weights_path, std::optional<int> budget)
{
    const Graph g = single_graph(fg);
    const Graph h = single_graph(fh);
    labeling::ContextOptions co;
    co.solver = solver_options(budget);
    if (!weights_path.empty())
        co.d_override = read_weights(weights_path, g.order() * h.order());
    const labeling::PipelineReport r = labeling::run_pipeline(g, h, co);
    print_pipeline(r);
    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out)
            throw ParseError("cannot write " + trace_path);
        if (r.claim1.success)
            labeling::write_trace(out, r.claim1.state.trace());
        else if (r.claim1.discrepancy)
            labeling::write_trace(out, r.claim1.discrepancy->trace);
    }
    return r.passed() ? kExitClean : kExitFinding;
}

int cmd_replay(const std::string& fg, const std::string& fh, const std::string& trace_path,
               const std::string& weights_path, std::optional<int> budget)
{
    const Graph g = single_graph(fg);
    const Graph h = single_graph(fh);
    labeling::ContextOptions co;
    co.solver = solver_options(budget);
    if (!weights_path.empty())
        co.d_override = read_weights(weights_path, g.order() * h.order());
    auto ctx = labeling::build_context(g, h, co);
    std::ifstream in(trace_path);
    if (!in)
        throw ParseError("cannot open " + trace_path);
    const auto trace = labeling::read_trace(in);
    const labeling::LabelState state = labeling::replay(ctx, trace);
    std::cout << "replayed " << trace.size() << " records over " << state.copies() << " copies\n";
    for (int c = 0; c < state.copies(); ++c) {
        const auto& cp = ctx->d.entries()[c];
        std::cout << "(" << cp.at.g << "," << cp.at.h << "," << cp.copy_id << ") "
                  << (state.label(c) ? state.label(c)->to_string() : "{}") << '\n';
    }
    if (!state.all_singleton()) {
        std::cout << "labels with two entries remain\n";
        return kExitFinding;
    }
    const auto claim2 = labeling::verify_claim2(state);
    for (const auto& c : claim2.classes)
        std::cout << "U_" << c.index << "=" << c.projection.to_string()
                  << (c.dominates ? " dominates H" : " does NOT dominate H") << '\n';
    return claim2.all_dominate() ? kExitClean : kExitFinding;
}

void write_csv_row(std::ostream& out, const harness::InstanceReport& r)
{
    auto value = [&](const std::string& key) {
        auto it = r.values.find(key);
        return it == r.values.end() ? std::string() : std::to_string(it->second.value);
    };
    const std::string kk = "{" + std::to_string(r.k) + "}";
    out << r.index << ',' << '"' << r.g_id << '"' << ',' << '"' << r.h_id << '"' << ','
        << harness::to_string(r.status) << ',' << value("gamma(G)") << ',' << value("gamma(H)") << ','
        << value("gamma(GxH)") << ',' << value("gamma2(GxH)") << ',' << value("gamma{2}(GxH)") << ','
        << value("gamma" + kk + "(GxH)") << ',' << value("gammaw{2}(GxH)") << ','
        << (r.labeling ? (r.labeling->passed ? "passed" : "failed") : "") << '\n';
}

int cmd_sweep(harness::SweepConfig cfg, const std::string& out_path, const std::string& csv_path,
              const std::string& invariants)
{
    if (!invariants.empty())
        cfg.invariants = harness::InvariantSelection::parse(invariants);
    if (auto env = env_budget_ms())
        cfg.budget_ms = env;
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    std::ofstream csv;
    if (!csv_path.empty()) {
        csv.open(csv_path);
        if (!csv)
            throw ParseError("cannot write " + csv_path);
        csv << "index,g,h,status,gamma_g,gamma_h,gamma_gh,gamma2_gh,gamma_k2_gh,gamma_kk_gh,"
               "gamma_w2_gh,labeling\n";
    }
    const harness::SweepSummary s = harness::sweep(cfg, [&](const harness::InstanceReport& r) {
        out << harness::to_json(r).dump() << '\n';
        if (csv.is_open())
            write_csv_row(csv, r);
        if (r.status == harness::Status::violation || r.status == harness::Status::discrepancy)
            std::cerr << "!!! " << harness::to_string(r.status) << " at pair " << r.index << ": G="
                      << r.g_id << " H=" << r.h_id << '\n';
    });
    out.flush();
    std::cerr << "pairs=" << s.pairs_total << " emitted=" << s.emitted << " reported=" << s.reported
              << " skipped=" << s.skipped << " violations=" << s.violations
              << " discrepancies=" << s.discrepancies << (s.halted ? " (halted)" : "") << '\n';
    return s.exit_code();
}

int cmd_allan_laskar(int n)
{
    const harness::AllanLaskarReport r = harness::verify_allan_laskar(n, solver_options(std::nullopt));
    for (const auto& [order, count] : r.connected_by_order)
        std::cout << "n=" << order << " connected=" << count
                  << " claw-free=" << r.claw_free_by_order.at(order) << '\n';
    std::cout << "checked " << r.graphs_checked << " claw-free graphs, " << r.minimum_sets_checked
              << " minimum independent dominating sets\n";
    for (const auto& m : r.mismatches)
        std::cout << "MISMATCH " << m << '\n';
    for (const auto& m : r.observation_violations)
        std::cout << "OBSERVATION " << m << '\n';
    std::cout << (r.passed() ? "gamma = i on every graph checked\n" : "FAILED\n");
    return r.passed() ? kExitClean : kExitFinding;
}

int cmd_enumerate(int n, bool connected, const std::string& out_path)
{
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    for (const Graph& g : enumerate_small_graphs(n, connected))
        out << write_graph6(g) << '\n';
    return kExitClean;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact domination invariants and Vizing-type inequality checks"};
    app.require_subcommand(1);

    std::optional<int> budget;
    int exit_code = kExitClean;

    auto* inv = app.add_subcommand("invariant", "Compute an invariant with its certificate");
    std::string inv_file, inv_which = "gamma", inv_method = "auto";
    int inv_k = 2;
    inv->add_option("file", inv_file, "graph file, or g6:STRING")->required();
    inv->add_option("--which", inv_which, "gamma | i | gamma2 | gammak | gammawk")->required();
    inv->add_option("--k", inv_k, "bound for gammak / gammawk")->check(CLI::Range(1, 1 << 20));
    inv->add_option("--method", inv_method, "auto | bnb | oracle")
        ->check(CLI::IsMember({"auto", "bnb", "oracle"}));
    inv->add_option("--budget-ms", budget, "time budget");
    inv->callback([&] { exit_code = cmd_invariant(inv_file, inv_which, inv_k, inv_method, budget); });

    auto* prod = app.add_subcommand("product", "Write the Cartesian product G□H");
    std::string prod_g, prod_h, prod_out = "-", prod_format = "auto";
    int prod_cap = kDefaultVertexCap;
    prod->add_option("fileG", prod_g)->required();
    prod->add_option("fileH", prod_h)->required();
    prod->add_option("-o,--output", prod_out, "output path (- for stdout)");
    prod->add_option("--format", prod_format, "auto | g6 | edges")
        ->check(CLI::IsMember({"auto", "g6", "edges"}));
    prod->add_option("--cap", prod_cap, "product vertex cap")->check(CLI::Range(1, 1 << 20));
    prod->callback([&] { exit_code = cmd_product(prod_g, prod_h, prod_out, prod_format, prod_cap); });

    auto* claw = app.add_subcommand("clawfree", "Exit 0 iff every graph in the file is claw-free");
    std::string claw_file;
    claw->add_option("file", claw_file)->required();
    claw->callback([&] { exit_code = cmd_clawfree(claw_file); });

    auto* filt = app.add_subcommand("filter-clawfree", "Copy the claw-free graphs of a graph6 file");
    std::string filt_in, filt_out;
    filt->add_option("in", filt_in)->required();
    filt->add_option("out", filt_out)->required();
    filt->callback([&] { exit_code = cmd_filter_clawfree(filt_in, filt_out); });

    auto* lab = app.add_subcommand("label", "Run the labelling pipeline on G□H (G claw-free)");
    std::string lab_g, lab_h, lab_trace, lab_d;
    lab->add_option("fileG", lab_g)->required();
    lab->add_option("fileH", lab_h)->required();
    lab->add_option("--dump-trace", lab_trace, "write the rule trace here");
    lab->add_option("--d", lab_d, "weak {2}-dominating function of G□H, one value per vertex");
    lab->add_option("--budget-ms", budget, "time budget");
    lab->callback([&] { exit_code = cmd_label(lab_g, lab_h, lab_trace, lab_d, budget); });

    auto* rep = app.add_subcommand("replay", "Replay a dumped trace and re-check the projections");
    std::string rep_g, rep_h, rep_trace, rep_d;
    rep->add_option("fileG", rep_g)->required();
    rep->add_option("fileH", rep_h)->required();
    rep->add_option("--trace", rep_trace)->required();
    rep->add_option("--d", rep_d, "weights file the trace was produced with");
    rep->callback([&] { exit_code = cmd_replay(rep_g, rep_h, rep_trace, rep_d, budget); });

    auto* sw = app.add_subcommand("sweep", "Check the inequalities over all (G, H) pairs");
    sw->set_help_flag("--help", "Print this help message and exit");
    harness::SweepConfig cfg;
    std::string sw_out = "-", sw_csv, sw_invariants;
    sw->add_option("--g", cfg.source_g, "G source: connected:N, all:N, random:C:N:P, g6:S, or a file")
        ->required();
    sw->add_option("--h", cfg.source_h, "H source")->required();
    sw->add_option("--k", cfg.k, "k for gamma_{k}")->check(CLI::Range(1, 1 << 20));
    sw->add_flag("--keep-going", cfg.keep_going, "do not halt at the first violation");
    sw->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 1 << 20));
    sw->add_option("--seed", cfg.seed, "seed for random sources");
    sw->add_flag("--claw-free", cfg.claw_free_filter, "keep only claw-free G");
    sw->add_option("--invariants", sw_invariants, "subset of gamma,gamma2,gamma_k,gamma_weak_k");
    sw->add_option("--budget-ms", cfg.budget_ms, "per-instance time budget");
    sw->add_option("--cap", cfg.vertex_cap, "product vertex cap")->check(CLI::Range(1, 1 << 20));
    sw->add_flag("--timings", cfg.timings, "add elapsed_ms to each record (not reproducible)");
    auto* no_label = sw->add_flag("--no-labeling", "skip the labelling pipeline");
    sw->add_option("-o,--output", sw_out, "JSON-lines report (- for stdout)");
    sw->add_option("--csv", sw_csv, "optional CSV summary");
    sw->callback([&] {
        cfg.run_labeling = no_label->count() == 0;
        exit_code = cmd_sweep(cfg, sw_out, sw_csv, sw_invariants);
    });

    auto* al = app.add_subcommand("check-allan-laskar", "gamma = i on connected claw-free graphs");
    int al_n = 8;
    al->add_option("--n", al_n, "largest order (<= 8)")->check(CLI::Range(1, 8));
    al->callback([&] { exit_code = cmd_allan_laskar(al_n); });

    auto* en = app.add_subcommand("enumerate", "Write all graphs of order n as graph6");
    int en_n = 4;
    bool en_connected = false;
    std::string en_out = "-";
    en->add_option("--n", en_n)->required()->check(CLI::Range(1, 8));
    en->add_flag("--connected", en_connected);
    en->add_option("-o,--output", en_out);
    en->callback([&] { exit_code = cmd_enumerate(en_n, en_connected, en_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitClean : kExitNegative;
    } catch (const SizeError& e) {
        std::cerr << "size/budget error: " << e.what() << '\n';
        return kExitLimits;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitFinding;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNegative;
    }
    return exit_code;
}
