#include "domlab/labeling.hpp"

#include "domlab/errors.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace domlab::labeling {

// ---------------------------------------------------------------- MultisetD

MultisetD::MultisetD(const CartesianProduct& product, const WeightFunction& f) : weights_(f)
{
    const Graph& p = product.graph();
    if (f.order() != p.order())
        throw DomainError("D: weight function has " + std::to_string(f.order()) +
                          " values, product has " + std::to_string(p.order()) + " vertices");
    if (f.k() != 2)
        throw DomainError("D: expected a {0,1,2}-valued function, got k=" + std::to_string(f.k()));
    if (!is_weak_k_dominating_fn(p, f))
        throw DomainError("D: function is not weak {2}-dominating on the product");
    for (Vertex v = 0; v < p.order(); ++v)
        for (int c = 0; c < f.at(v); ++c)
            entries_.push_back({product.coords(v), c});
}

int MultisetD::index_of(const Copy& c) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), c);
    if (it == entries_.end() || *it != c)
        return -1;
    return static_cast<int>(it - entries_.begin());
}

// -------------------------------------------------------------------- Label

Label Label::single(int i)
{
    if (i < 1)
        throw StateError("label entries are 1-based, got " + std::to_string(i));
    return Label(i, 0);
}

Label Label::pair(int i, int j)
{
    if (i < 1 || j < 1 || i == j)
        throw StateError("2-entry label needs distinct positive entries");
    return Label(std::min(i, j), std::max(i, j));
}

int Label::second() const
{
    if (second_ == 0)
        throw StateError("label " + to_string() + " has one entry");
    return second_;
}

int Label::other(int i) const
{
    if (second_ == 0 || !contains(i))
        throw StateError("label " + to_string() + " has no entry besides " + std::to_string(i));
    return i == first_ ? second_ : first_;
}

std::string Label::to_string() const
{
    if (second_ == 0)
        return "{" + std::to_string(first_) + "}";
    return "{" + std::to_string(first_) + "," + std::to_string(second_) + "}";
}

namespace {

std::vector<int> parse_ints(std::string_view text)
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ',' || text[pos] == ' '))
            ++pos;
        if (pos == text.size())
            break;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc())
            throw ParseError("expected integer in '" + std::string(text) + "'");
        out.push_back(value);
        pos = ptr - text.data();
    }
    return out;
}

std::string_view strip_braces(std::string_view text, char open, char close)
{
    if (text.size() < 2 || text.front() != open || text.back() != close)
        throw ParseError("expected " + std::string(1, open) + "..." + std::string(1, close) +
                         ", got '" + std::string(text) + "'");
    return text.substr(1, text.size() - 2);
}

}  // namespace

Label Label::parse(std::string_view text)
{
    const std::vector<int> v = parse_ints(strip_braces(text, '{', '}'));
    if (v.size() == 1)
        return single(v[0]);
    if (v.size() == 2)
        return pair(v[0], v[1]);
    throw ParseError("label must have one or two entries: '" + std::string(text) + "'");
}

// ------------------------------------------------------------------ context

int StarContext::index_of(Vertex v) const
{
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v)
        return 0;
    return static_cast<int>(it - s.begin()) + 1;
}

std::shared_ptr<const StarContext> build_context(const Graph& g, const Graph& h,
                                                 const ContextOptions& opts)
{
    if (!is_claw_free(g))
        throw DomainError("G contains an induced claw K_{1,3}");
    CartesianProduct product(g, h, opts.solver.vertex_cap);

    const InvariantResult gam = gamma(g, opts.solver);
    const InvariantResult ind = independent_gamma(g, opts.solver);
    if (ind.value != gam.value)
        throw InternalError("claw-free G with i(G)=" + std::to_string(ind.value) +
                            " != gamma(G)=" + std::to_string(gam.value));
    const VertexSet& s_set = std::get<VertexSet>(ind.certificate);

    WeightFunction f = opts.d_override ? *opts.d_override
                                       : std::get<WeightFunction>(
                                             gamma_weak_k(product.graph(), 2, opts.solver).certificate);
    MultisetD d(product, f);

    return std::make_shared<const StarContext>(StarContext{
        .g = g,
        .h = h,
        .s = s_set.members(),
        .s_set = s_set,
        .k = s_set.count(),
        .gamma_g = gam.value,
        .product = std::move(product),
        .d = std::move(d),
    });
}

ColumnClass classify_column(const StarContext& ctx, Vertex v)
{
    if (int i = ctx.index_of(v); i != 0)
        return {ColumnClass::Kind::own_or_private, i, 0};
    const VertexSet hits = ctx.g.neighbors(v) & ctx.s_set;
    const std::vector<Vertex> m = hits.members();
    if (m.size() == 1)
        return {ColumnClass::Kind::own_or_private, ctx.index_of(m[0]), 0};
    if (m.size() == 2)
        return {ColumnClass::Kind::shared, ctx.index_of(m[0]), ctx.index_of(m[1])};
    throw InternalError("vertex " + std::to_string(v) + " of G has " + std::to_string(m.size()) +
                        " neighbours in the independent dominating set S; expected 1 or 2");
}

// -------------------------------------------------------------------- trace

std::string rule_name(Rule r)
{
    if (r == Rule::claim1_choice)
        return "claim1";
    return std::to_string(static_cast<int>(r));
}

std::string format_trace_record(const TraceRecord& r)
{
    std::ostringstream os;
    os << "rule=" << rule_name(r.rule) << " copy=(" << r.copy.at.g << ',' << r.copy.at.h << ','
       << r.copy.copy_id << ") old=" << (r.old_label ? r.old_label->to_string() : "{}")
       << " new=" << r.new_label.to_string();
    return os.str();
}

TraceRecord parse_trace_record(std::string_view line)
{
    std::istringstream is{std::string(line)};
    std::string rule_tok, copy_tok, old_tok, new_tok, extra;
    if (!(is >> rule_tok >> copy_tok >> old_tok >> new_tok) || (is >> extra))
        throw ParseError("trace: malformed record '" + std::string(line) + "'");
    auto value = [&](const std::string& tok, std::string_view key) {
        if (!tok.starts_with(key))
            throw ParseError("trace: expected '" + std::string(key) + "' in '" + tok + "'");
        return std::string_view(tok).substr(key.size());
    };

    TraceRecord r{Rule::own_or_private, {}, std::nullopt, Label::single(1)};
    const std::string_view rule = value(rule_tok, "rule=");
    if (rule == "claim1") {
        r.rule = Rule::claim1_choice;
    } else {
        const std::vector<int> id = parse_ints(rule);
        if (id.size() != 1 || id[0] < 1 || id[0] > 10)
            throw ParseError("trace: unknown rule '" + std::string(rule) + "'");
        r.rule = static_cast<Rule>(id[0]);
    }
    const std::vector<int> c = parse_ints(strip_braces(value(copy_tok, "copy="), '(', ')'));
    if (c.size() != 3)
        throw ParseError("trace: copy must be (g,h,c)");
    r.copy = {{c[0], c[1]}, c[2]};
    const std::string_view old_text = value(old_tok, "old=");
    if (old_text != "{}")
        r.old_label = Label::parse(old_text);
    r.new_label = Label::parse(value(new_tok, "new="));
    return r;
}

void write_trace(std::ostream& out, std::span<const TraceRecord> trace)
{
    for (const auto& r : trace)
        out << format_trace_record(r) << '\n';
}

std::vector<TraceRecord> read_trace(std::istream& in)
{
    std::vector<TraceRecord> out;
    std::string line;
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            out.push_back(parse_trace_record(line));
    return out;
}

// --------------------------------------------------------------- LabelState

LabelState::LabelState(std::shared_ptr<const StarContext> ctx)
    : ctx_(std::move(ctx)), labels_(ctx_->d.size())
{
}

const std::optional<Label>& LabelState::label(int copy) const
{
    if (copy < 0 || copy >= copies())
        throw StateError("no copy " + std::to_string(copy));
    return labels_[copy];
}

void LabelState::apply(Rule rule, int copy, Label next)
{
    if (copy < 0 || copy >= copies())
        throw StateError("no copy " + std::to_string(copy));
    if (next.first() > ctx_->k || (next.size() == 2 && next.second() > ctx_->k))
        throw StateError("label " + next.to_string() + " outside [k], k=" + std::to_string(ctx_->k));
    trace_.push_back({rule, ctx_->d.entries()[copy], labels_[copy], next});
    labels_[copy] = next;
}

bool LabelState::total() const
{
    return std::all_of(labels_.begin(), labels_.end(), [](const auto& l) { return l.has_value(); });
}

bool LabelState::all_singleton() const
{
    return std::all_of(labels_.begin(), labels_.end(),
                       [](const auto& l) { return l && l->size() == 1; });
}

int LabelState::entry_count() const
{
    int c = 0;
    for (const auto& l : labels_)
        if (l)
            c += l->size();
    return c;
}

std::vector<int> LabelState::open_copies() const
{
    std::vector<int> out;
    for (int c = 0; c < copies(); ++c)
        if (labels_[c] && labels_[c]->size() == 2)
            out.push_back(c);
    return out;
}

// ------------------------------------------------------------ rules (1)-(4)

namespace {

// Some h' ∈ N_H[h] with (v_i, h') ∈ D.
bool column_near(const StarContext& ctx, int i, Vertex h)
{
    const Vertex vi = ctx.s[i - 1];
    const VertexSet near = closed_nbhd(ctx.h, h);
    bool found = false;
    near.for_each([&](Vertex y) {
        if (!found && ctx.d.multiplicity(ctx.product.flat({vi, y})) > 0)
            found = true;
    });
    return found;
}

}  // namespace

LabelState initial_labeling(std::shared_ptr<const StarContext> ctx)
{
    LabelState state(ctx);
    const auto entries = ctx->d.entries();
    for (int c = 0; c < static_cast<int>(entries.size()); ++c) {
        const Copy& copy = entries[c];
        const ColumnClass cls = classify_column(*ctx, copy.at.g);
        if (cls.kind == ColumnClass::Kind::own_or_private) {
            state.apply(Rule::own_or_private, c, Label::single(cls.i));
            continue;
        }
        const bool empty_i = !column_near(*ctx, cls.i, copy.at.h);
        const bool empty_j = !column_near(*ctx, cls.j, copy.at.h);
        const bool doubled = ctx->d.multiplicity(ctx->product.flat(copy.at)) == 2;
        if (empty_i && empty_j) {
            if (doubled)
                state.apply(Rule::both_empty, c, Label::single(copy.copy_id == 0 ? cls.i : cls.j));
            else
                state.apply(Rule::both_empty, c, Label::pair(cls.i, cls.j));
        } else if (empty_i || empty_j) {
            state.apply(Rule::one_empty, c, Label::single(empty_i ? cls.i : cls.j));
        } else {
            state.apply(Rule::neither_empty, c, Label::single(cls.i));
        }
    }
    if (!state.total())
        throw InternalError("initial labelling left a copy unlabelled");
    return state;
}

// ----------------------------------------------------------- rules (5)-(9)

namespace {

struct Firing {
    Rule rule;
    int copy;
    Label next;
};

// Rules 5-9 on the ordered pair (a, b); empty when none applies.
std::vector<Firing> applicable(const LabelState& st, int a, int b)
{
    const StarContext& ctx = st.context();
    const Copy& ca = ctx.d.entries()[a];
    const Copy& cb = ctx.d.entries()[b];
    const Label& la = *st.label(a);
    const Label& lb = *st.label(b);
    const bool adjacent = ctx.h.adjacent(ca.at.h, cb.at.h);
    const bool same_fiber = ca.at.h == cb.at.h;

    if (adjacent && la.size() == 2 && lb == la)
        return {{Rule::adjacent_equal_pairs, a, Label::single(la.first())},
                {Rule::adjacent_equal_pairs, b, Label::single(la.second())}};
    if (adjacent && la.size() == 1 && lb.size() == 2 && lb.contains(la.first()))
        return {{Rule::adjacent_single_pair, b, Label::single(lb.other(la.first()))}};
    if (same_fiber && la.size() == 2 && lb == la)
        return {{Rule::fiber_equal_pairs, a, Label::single(la.first())},
                {Rule::fiber_equal_pairs, b, Label::single(la.second())}};
    if (same_fiber && la.size() == 1 && lb.size() == 2 && lb.contains(la.first()))
        return {{Rule::fiber_single_pair, b, Label::single(lb.other(la.first()))}};
    if (same_fiber && la.size() == 2 && lb.size() == 2 && lb != la) {
        for (int shared : {la.first(), la.second()})
            if (lb.contains(shared))
                return {{Rule::fiber_overlapping_pairs, b, Label::single(lb.other(shared))}};
    }
    return {};
}

}  // namespace

LabelState finishing_pass(LabelState state)
{
    if (!state.total())
        throw StateError("finishing pass needs a complete initial labelling");
    const int m = state.copies();
    bool fired = true;
    while (fired) {
        fired = false;
        const int before = state.entry_count();
        for (int a = 0; a < m && !fired; ++a)
            for (int b = 0; b < m && !fired; ++b) {
                if (a == b)
                    continue;
                const std::vector<Firing> f = applicable(state, a, b);
                for (const Firing& x : f)
                    state.apply(x.rule, x.copy, x.next);
                fired = !f.empty();
            }
        if (fired && state.entry_count() >= before)
            throw InternalError("finishing rule did not reduce the label entry count");
    }
    return state;
}

// ------------------------------------------------------------ claims 1 & 2

VertexSet project_label_class(const LabelState& state, int i)
{
    const StarContext& ctx = state.context();
    if (i < 1 || i > ctx.k)
        throw StateError("class index " + std::to_string(i) + " outside [k]");
    VertexSet u(ctx.h.order());
    for (int c = 0; c < state.copies(); ++c) {
        const auto& l = state.label(c);
        if (!l || l->size() != 1)
            throw StateError("projection needs every label to have exactly one entry");
        if (l->first() == i)
            u.insert(ctx.d.entries()[c].at.h);
    }
    return u;
}

bool Claim2Report::all_dominate() const
{
    return std::all_of(classes.begin(), classes.end(), [](const auto& c) { return c.dominates; });
}

Claim2Report verify_claim2(const LabelState& state)
{
    const StarContext& ctx = state.context();
    Claim2Report report;
    for (int i = 1; i <= ctx.k; ++i) {
        ClassOutcome out;
        out.index = i;
        out.projection = project_label_class(state, i);
        out.dominates = is_dominating(ctx.h, out.projection);
        if (!out.dominates)
            for (Vertex y = 0; y < ctx.h.order(); ++y)
                if (!out.projection.contains(y) && !ctx.h.neighbors(y).intersects(out.projection)) {
                    out.witness = y;
                    break;
                }
        report.classes.push_back(std::move(out));
    }
    return report;
}

Claim1Outcome resolve_claim1(LabelState state)
{
    if (!state.total())
        throw StateError("claim-1 resolution needs a complete labelling");
    const std::vector<int> open = state.open_copies();
    const int m = static_cast<int>(open.size());
    if (m > 30)
        throw SizeError("claim-1 resolution: " + std::to_string(m) + " open labels exceed 30");

    std::vector<Label> pairs;
    for (int c : open)
        pairs.push_back(*state.label(c));

    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        LabelState trial = state;
        for (int t = 0; t < m; ++t) {
            const bool larger = (mask >> (m - 1 - t)) & 1;
            trial.apply(Rule::claim1_choice, open[t],
                        Label::single(larger ? pairs[t].second() : pairs[t].first()));
        }
        if (verify_claim2(trial).all_dominate())
            return {std::move(trial), true, m, mask + 1, std::nullopt};
    }

    // Report against the first assignment in canonical order.
    LabelState first = state;
    for (int t = 0; t < m; ++t)
        first.apply(Rule::claim1_choice, open[t], Label::single(pairs[t].first()));
    const Claim2Report claim2 = verify_claim2(first);
    Discrepancy d;
    d.reason = m == 0 ? "all labels are singletons but a projection does not dominate H"
                      : "no resolution of the open labels makes every projection dominate H";
    for (const auto& c : claim2.classes)
        if (!c.dominates) {
            d.class_index = c.index;
            d.witness = c.witness;
            break;
        }
    d.trace.assign(first.trace().begin(), first.trace().end());
    return {std::move(state), false, m, total, std::move(d)};
}

LabelState replay(std::shared_ptr<const StarContext> ctx, std::span<const TraceRecord> trace)
{
    LabelState state(ctx);
    for (const TraceRecord& r : trace) {
        const int c = ctx->d.index_of(r.copy);
        if (c < 0)
            throw StateError("trace names copy (" + std::to_string(r.copy.at.g) + "," +
                             std::to_string(r.copy.at.h) + "," + std::to_string(r.copy.copy_id) +
                             ") which is not in D");
        if (state.label(c) != r.old_label)
            throw StateError("trace record does not match the replayed state: " +
                             format_trace_record(r));
        state.apply(r.rule, c, r.new_label);
    }
    return state;
}

// ----------------------------------------------------------------- pipeline

bool PipelineReport::passed() const
{
    return claim1.success && claim2.all_dominate() && count_holds;
}

PipelineReport run_pipeline(const Graph& g, const Graph& h, const ContextOptions& opts)
{
    auto ctx = build_context(g, h, opts);
    LabelState initial = initial_labeling(ctx);
    const int initial_open = static_cast<int>(initial.open_copies().size());
    const std::size_t initial_trace = initial.trace().size();
    LabelState finished = finishing_pass(std::move(initial));
    const int finishing_steps = static_cast<int>(finished.trace().size() - initial_trace);
    Claim1Outcome claim1 = resolve_claim1(std::move(finished));

    Claim2Report claim2;
    std::vector<int> sizes;
    int total = 0;
    bool count = false;
    const int gamma_h = gamma(h, opts.solver).value;
    if (claim1.success) {
        claim2 = verify_claim2(claim1.state);
        count = true;
        for (const auto& c : claim2.classes) {
            sizes.push_back(c.projection.count());
            total += c.projection.count();
            count = count && c.projection.count() >= gamma_h;
        }
        count = count && total <= ctx->d.size() && total >= ctx->k * gamma_h;
    }

    return PipelineReport{
        .context = ctx,
        .k = ctx->k,
        .d_size = ctx->d.size(),
        .gamma_h = gamma_h,
        .initial_open = initial_open,
        .finishing_steps = finishing_steps,
        .claim1 = std::move(claim1),
        .claim2 = std::move(claim2),
        .projection_sizes = std::move(sizes),
        .projection_total = total,
        .count_holds = count,
    };
}

}  // namespace domlab::labeling
