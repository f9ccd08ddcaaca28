#include "domlab/sweep.hpp"

#include "domlab/enumerate.hpp"
#include "domlab/errors.hpp"
#include "domlab/graph_io.hpp"
#include "domlab/labeling.hpp"
#include "domlab/product.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <sstream>
#include <thread>

namespace domlab::harness {

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        out.push_back(cur);
    return out;
}

long long to_int(const std::string& s, const std::string& context)
{
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("bad integer '" + s + "' in source '" + context + "'");
    return v;
}

std::pair<int, int> order_range(const std::string& s, const std::string& context)
{
    const auto parts = split(s, '-');
    if (parts.size() == 1)
        return {1, static_cast<int>(to_int(parts[0], context))};
    if (parts.size() == 2)
        return {static_cast<int>(to_int(parts[0], context)),
                static_cast<int>(to_int(parts[1], context))};
    throw ParseError("bad order range '" + s + "' in source '" + context + "'");
}

std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::vector<Graph> resolve_source(const std::string& spec, std::uint64_t seed)
{
    const auto colon = spec.find(':');
    const std::string kind = colon == std::string::npos ? "" : spec.substr(0, colon);
    const std::string rest = colon == std::string::npos ? spec : spec.substr(colon + 1);

    if (kind == "connected" || kind == "all") {
        auto [lo, hi] = order_range(rest, spec);
        if (lo < 1 || hi < lo)
            throw ParseError("empty order range in source '" + spec + "'");
        std::vector<Graph> out;
        for (int n = lo; n <= hi; ++n)
            for (Graph& g : enumerate_small_graphs(n, kind == "connected"))
                out.push_back(std::move(g));
        return out;
    }
    if (kind == "random") {
        const auto parts = split(rest, ':');
        if (parts.size() != 3)
            throw ParseError("random source is random:COUNT:N:P, got '" + spec + "'");
        const long long count = to_int(parts[0], spec);
        auto [lo, hi] = order_range(parts[1], spec);
        if (parts[1].find('-') == std::string::npos)
            lo = hi;
        double p = 0;
        try {
            p = std::stod(parts[2]);
        } catch (const std::exception&) {
            throw ParseError("bad probability in source '" + spec + "'");
        }
        if (count < 0 || lo < 1 || hi < lo)
            throw ParseError("bad random source '" + spec + "'");
        std::uint64_t state = seed;
        std::vector<Graph> out;
        for (long long t = 0; t < count; ++t) {
            const std::uint64_t s = splitmix64(state);
            const int n = lo + static_cast<int>(s % static_cast<std::uint64_t>(hi - lo + 1));
            out.push_back(random_graph(n, p, s));
        }
        return out;
    }
    if (kind == "g6")
        return {parse_graph6(rest)};
    if (kind == "file")
        return read_graphs(std::filesystem::path(rest));
    return read_graphs(std::filesystem::path(spec));
}

std::string graph_id(const Graph& g)
{
    if (g.order() <= 62)
        return write_graph6(g);
    std::ostringstream os;
    os << "edges:" << g.order() << ':';
    bool first = true;
    for (auto [u, v] : g.edges()) {
        os << (first ? "" : ",") << u << '-' << v;
        first = false;
    }
    return os.str();
}

InvariantSelection InvariantSelection::parse(const std::string& text)
{
    InvariantSelection sel{false, false, false, false};
    for (const std::string& tok : split(text, ',')) {
        if (tok == "gamma")
            sel.gamma = true;
        else if (tok == "gamma2")
            sel.gamma2 = true;
        else if (tok == "gamma_k" || tok == "gammak")
            sel.gamma_k = true;
        else if (tok == "gamma_weak_k" || tok == "gammawk")
            sel.gamma_weak_k = true;
        else if (!tok.empty())
            throw DomainError("unknown invariant '" + tok + "' in selection");
    }
    return sel;
}

void SweepConfig::validate() const
{
    if (k < 1)
        throw DomainError("k must be >= 1");
    if (jobs < 1)
        throw DomainError("jobs must be >= 1");
    if (vertex_cap < 1)
        throw DomainError("vertex cap must be positive");
    if (budget_ms && *budget_ms < 1)
        throw DomainError("time budget must be positive");
}

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::ok: return "ok";
    case Status::violation: return "violation";
    case Status::discrepancy: return "discrepancy";
    case Status::skipped: return "skipped";
    }
    return "?";
}

nlohmann::ordered_json to_json(const InstanceReport& r)
{
    nlohmann::ordered_json j;
    j["index"] = r.index;
    j["g"] = r.g_id;
    j["h"] = r.h_id;
    j["status"] = to_string(r.status);
    if (r.status == Status::skipped) {
        j["reason"] = r.skip_reason;
        return j;
    }
    j["g_claw_free"] = r.g_claw_free;
    j["k"] = r.k;
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& [name, v] : r.values)
        values[name] = {{"value", v.value}, {"method", to_string(v.method)}};
    j["values"] = values;
    nlohmann::ordered_json ineq = nlohmann::ordered_json::array();
    for (const auto& q : r.inequalities)
        ineq.push_back({{"name", q.name},
                        {"invariant", q.invariant},
                        {"lhs", q.lhs},
                        {"rhs", q.rhs},
                        {"holds", q.holds},
                        {"covered_by_theorem", q.covered_by_theorem}});
    j["inequalities"] = ineq;
    if (r.labeling) {
        const LabelingSummary& l = *r.labeling;
        nlohmann::ordered_json lab;
        lab["passed"] = l.passed;
        lab["k"] = l.k;
        lab["d_size"] = l.d_size;
        lab["gamma_h"] = l.gamma_h;
        lab["initial_open"] = l.initial_open;
        lab["finishing_steps"] = l.finishing_steps;
        lab["open_after_fixpoint"] = l.open_after_fixpoint;
        lab["assignments_tried"] = l.assignments_tried;
        lab["projection_sizes"] = l.projection_sizes;
        lab["projection_total"] = l.projection_total;
        lab["count_holds"] = l.count_holds;
        lab["agrees_with_solver"] = l.agrees_with_solver;
        if (!l.discrepancy.empty()) {
            lab["discrepancy"] = l.discrepancy;
            lab["discrepancy_class"] = l.discrepancy_class;
            if (l.discrepancy_witness)
                lab["discrepancy_witness"] = *l.discrepancy_witness;
            lab["trace"] = l.trace;
        }
        j["labeling"] = lab;
    }
    if (r.elapsed_ms)
        j["elapsed_ms"] = *r.elapsed_ms;
    return j;
}

namespace {

LabelingSummary summarize(const labeling::PipelineReport& p)
{
    LabelingSummary s;
    s.passed = p.passed();
    s.k = p.k;
    s.d_size = p.d_size;
    s.gamma_h = p.gamma_h;
    s.initial_open = p.initial_open;
    s.finishing_steps = p.finishing_steps;
    s.open_after_fixpoint = p.claim1.open_labels;
    s.assignments_tried = p.claim1.assignments_tried;
    s.projection_sizes = p.projection_sizes;
    s.projection_total = p.projection_total;
    s.count_holds = p.count_holds;
    if (p.claim1.discrepancy) {
        const labeling::Discrepancy& d = *p.claim1.discrepancy;
        s.discrepancy = d.reason;
        s.discrepancy_class = d.class_index;
        s.discrepancy_witness = d.witness;
        for (const auto& rec : d.trace)
            s.trace.push_back(labeling::format_trace_record(rec));
    } else if (!p.passed()) {
        s.discrepancy = "projection sizes do not support |D| >= k*gamma(H)";
    }
    return s;
}

}  // namespace

InstanceReport run_instance(const Graph& g, const Graph& h, const SweepConfig& cfg, std::size_t index)
{
    const auto start = std::chrono::steady_clock::now();
    InstanceReport r;
    r.index = index;
    r.g_id = graph_id(g);
    r.h_id = graph_id(h);
    r.k = cfg.k;
    r.g_claw_free = is_claw_free(g);

    SolverOptions so;
    so.vertex_cap = cfg.vertex_cap;
    if (cfg.budget_ms)
        so.deadline = start + std::chrono::milliseconds(*cfg.budget_ms);

    auto record = [&](const std::string& key, const InvariantResult& res) {
        r.values[key] = {res.value, res.method};
        return res.value;
    };
    auto check = [&](std::string name, std::string key, int lhs, int rhs, bool covered) {
        r.inequalities.push_back({std::move(name), std::move(key), lhs, rhs, lhs >= rhs, covered});
    };

    try {
        const int gamma_g = record("gamma(G)", gamma(g, so));
        const int gamma_h = record("gamma(H)", gamma(h, so));
        const int rhs = gamma_g * gamma_h;
        const CartesianProduct product(g, h, cfg.vertex_cap);
        const Graph& p = product.graph();
        const bool claw = r.g_claw_free;
        const std::string k_tag = "{" + std::to_string(cfg.k) + "}";

        if (cfg.invariants.gamma)
            check("vizing", "gamma(GxH)", record("gamma(GxH)", gamma(p, so)), rhs, false);
        if (cfg.invariants.gamma2)
            check("two_domination", "gamma2(GxH)", record("gamma2(GxH)", gamma2(p, so)), rhs, claw);
        if (cfg.invariants.gamma_k) {
            check("k2_domination", "gamma{2}(GxH)", record("gamma{2}(GxH)", gamma_k(p, 2, so)), rhs, claw);
            const std::string key = "gamma" + k_tag + "(GxH)";
            const int v = cfg.k == 2 ? r.values[key].value : record(key, gamma_k(p, cfg.k, so));
            // γ_{k} >= γ_{2} for k >= 2: capping a {k}-function at 2 keeps it {2}-dominating.
            check("kk_domination", key, v, rhs, claw && cfg.k >= 2);
        }

        std::optional<InvariantResult> weak2;
        if (cfg.invariants.gamma_weak_k || (claw && cfg.run_labeling)) {
            weak2 = gamma_weak_k(p, 2, so);
            if (cfg.invariants.gamma_weak_k)
                check("weak_k2_domination", "gammaw{2}(GxH)", record("gammaw{2}(GxH)", *weak2), rhs, claw);
            if (cfg.invariants.gamma_weak_k && cfg.k != 2)
                record("gammaw" + k_tag + "(GxH)", gamma_weak_k(p, cfg.k, so));
        }

        if (claw && cfg.run_labeling) {
            labeling::ContextOptions co;
            co.solver = so;
            co.d_override = std::get<WeightFunction>(weak2->certificate);
            try {
                const labeling::PipelineReport pipe = labeling::run_pipeline(g, h, co);
                LabelingSummary s = summarize(pipe);
                // The labelling re-derives |D| >= γ(G)γ(H); it must match the solver.
                s.agrees_with_solver = s.passed == (weak2->value >= rhs) && s.d_size == weak2->value &&
                                       pipe.k == gamma_g;
                if (s.passed && !s.agrees_with_solver)
                    s.discrepancy = "labelling count disagrees with the solver";
                r.labeling = std::move(s);
            } catch (const InternalError& e) {
                LabelingSummary s;
                s.discrepancy = std::string("tripwire: ") + e.what();
                r.labeling = std::move(s);
            }
        }
    } catch (const SizeError& e) {
        InstanceReport skipped;
        skipped.index = index;
        skipped.g_id = r.g_id;
        skipped.h_id = r.h_id;
        skipped.k = cfg.k;
        skipped.status = Status::skipped;
        skipped.skip_reason = e.what();
        return skipped;
    }

    bool violated = false;
    for (const auto& q : r.inequalities)
        violated = violated || !q.holds;
    if (violated)
        r.status = Status::violation;
    else if (r.labeling && (!r.labeling->passed || !r.labeling->agrees_with_solver))
        r.status = Status::discrepancy;
    if (cfg.timings)
        r.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

int SweepSummary::exit_code() const
{
    if (violations > 0 || discrepancies > 0)
        return 2;
    if (skipped > 0)
        return 3;
    return 0;
}

SweepSummary sweep(const SweepConfig& cfg, const ReportSink& sink)
{
    cfg.validate();
    std::vector<Graph> gs = resolve_source(cfg.source_g, cfg.seed);
    std::vector<Graph> hs = resolve_source(cfg.source_h, cfg.seed ^ 0x5bd1e995ULL);
    return sweep(gs, hs, cfg, sink);
}

SweepSummary sweep(const std::vector<Graph>& gs_in, const std::vector<Graph>& hs,
                   const SweepConfig& cfg, const ReportSink& sink)
{
    cfg.validate();
    std::vector<Graph> gs;
    for (const Graph& g : gs_in)
        if (!cfg.claw_free_filter || is_claw_free(g))
            gs.push_back(g);

    SweepSummary summary;
    summary.pairs_total = gs.size() * hs.size();
    const std::size_t total = summary.pairs_total;

    auto compute = [&](std::size_t i) {
        try {
            return run_instance(gs[i / hs.size()], hs[i % hs.size()], cfg, i);
        } catch (const std::exception& e) {
            InstanceReport r;
            r.index = i;
            r.g_id = graph_id(gs[i / hs.size()]);
            r.h_id = graph_id(hs[i % hs.size()]);
            r.k = cfg.k;
            r.status = Status::discrepancy;
            LabelingSummary s;
            s.discrepancy = std::string("internal error: ") + e.what();
            r.labeling = std::move(s);
            return r;
        }
    };
    // Returns true when the sweep should halt.
    auto emit = [&](const InstanceReport& r) {
        sink(r);
        ++summary.emitted;
        switch (r.status) {
        case Status::skipped: ++summary.skipped; return false;
        case Status::violation: ++summary.violations; ++summary.reported; break;
        case Status::discrepancy: ++summary.discrepancies; ++summary.reported; break;
        case Status::ok: ++summary.reported; return false;
        }
        return !cfg.keep_going;
    };

    if (cfg.jobs == 1 || total <= 1) {
        for (std::size_t i = 0; i < total; ++i)
            if (emit(compute(i))) {
                summary.halted = i + 1 < total;
                break;
            }
        return summary;
    }

    std::vector<std::optional<InstanceReport>> slots(total);
    std::mutex lock;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    {
        std::vector<std::jthread> workers;
        for (int w = 0; w < cfg.jobs; ++w)
            workers.emplace_back([&] {
                while (!stop) {
                    const std::size_t i = next++;
                    if (i >= total)
                        break;
                    InstanceReport r = compute(i);
                    std::scoped_lock guard(lock);
                    slots[i] = std::move(r);
                    ready.notify_all();
                }
            });
        for (std::size_t i = 0; i < total; ++i) {
            InstanceReport r;
            {
                std::unique_lock guard(lock);
                ready.wait(guard, [&] { return slots[i].has_value(); });
                r = std::move(*slots[i]);
                slots[i].reset();
            }
            if (emit(r)) {
                summary.halted = i + 1 < total;
                stop = true;
                break;
            }
        }
        stop = true;
    }
    return summary;
}

AllanLaskarReport verify_allan_laskar(int n_max, const SolverOptions& opts)
{
    if (n_max > kMaxEnumerationOrder)
        throw SizeError("Allan-Laskar check enumerates internally, n_max <= 8");
    AllanLaskarReport rep;
    rep.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        const std::vector<Graph> graphs = enumerate_small_graphs(n, true);
        rep.connected_by_order[n] = static_cast<int>(graphs.size());
        int claw_free = 0;
        for (const Graph& g : graphs) {
            if (!is_claw_free(g))
                continue;
            ++claw_free;
            ++rep.graphs_checked;
            const int gam = gamma(g, opts).value;
            const int ind = independent_gamma(g, opts).value;
            if (gam != ind) {
                rep.mismatches.push_back(write_graph6(g) + ": gamma=" + std::to_string(gam) +
                                         " i=" + std::to_string(ind));
                continue;
            }
            // Every independent dominating set of size i(G).
            std::vector<Vertex> pick(ind);
            for (int t = 0; t < ind; ++t)
                pick[t] = t;
            while (true) {
                const VertexSet s(n, pick);
                if (is_independent_dominating(g, s)) {
                    ++rep.minimum_sets_checked;
                    for (Vertex v = 0; v < n; ++v) {
                        if (s.contains(v))
                            continue;
                        const int hits = g.neighbors(v).intersection_count(s);
                        if (hits < 1 || hits > 2)
                            rep.observation_violations.push_back(
                                write_graph6(g) + ": S=" + s.to_string() + " vertex " +
                                std::to_string(v) + " has " + std::to_string(hits) +
                                " S-neighbours");
                    }
                }
                int t = ind - 1;
                while (t >= 0 && pick[t] == n - ind + t)
                    --t;
                if (t < 0)
                    break;
                ++pick[t];
                for (int u = t + 1; u < ind; ++u)
                    pick[u] = pick[u - 1] + 1;
            }
        }
        rep.claw_free_by_order[n] = claw_free;
    }
    return rep;
}

}  // namespace domlab::harness
