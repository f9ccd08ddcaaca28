#pragma once

// Labeling of a minimum weak {2}-dominating multiset D of G□H (G claw-free)
// by indices of a minimum independent dominating set S = {v_1..v_k} of G,
// followed by projection of each label class onto H.

#include "domlab/domination.hpp"
#include "domlab/product.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace domlab::labeling {

/// One copy of a vertex of D; a vertex with f-value 2 has copies 0 and 1.
struct Copy {
    ProductVertex at;
    int copy_id = 0;

    friend auto operator<=>(const Copy&, const Copy&) = default;
};

/// The weak {2}-dominating function of G□H as a multiset of vertex copies,
/// ordered by flat product index, then copy id.
class MultisetD {
public:
    MultisetD(const CartesianProduct& product, const WeightFunction& f);

    std::span<const Copy> entries() const noexcept { return entries_; }
    int size() const noexcept { return static_cast<int>(entries_.size()); }
    const WeightFunction& weights() const noexcept { return weights_; }
    /// f(g, h): 0, 1 or 2.
    int multiplicity(Vertex flat) const { return weights_.at(flat); }
    /// Index of a copy in entries(), or -1.
    int index_of(const Copy& c) const;

private:
    WeightFunction weights_;
    std::vector<Copy> entries_;
};

/// A label {i} or {i,j} with entries drawn from [k] = {1..k}.
class Label {
public:
    static Label single(int i);
    static Label pair(int i, int j);

    int size() const noexcept { return second_ == 0 ? 1 : 2; }
    /// Smaller entry.
    int first() const noexcept { return first_; }
    /// Larger entry of a 2-entry label.
    int second() const;
    bool contains(int i) const noexcept { return i == first_ || (second_ != 0 && i == second_); }
    /// The other entry of a 2-entry label.
    int other(int i) const;

    /// "{1}" or "{1,2}"
    std::string to_string() const;
    static Label parse(std::string_view text);

    friend bool operator==(const Label&, const Label&) = default;

private:
    Label(int a, int b) : first_(a), second_(b) {}

    int first_;
    int second_;
};

/// Minimum independent dominating set of a claw-free G (|S| = γ(G)) and D.
struct StarContext {
    Graph g;
    Graph h;
    std::vector<Vertex> s;  // v_1..v_k in increasing vertex order
    VertexSet s_set;
    int k = 0;
    int gamma_g = 0;
    CartesianProduct product;
    MultisetD d;

    /// Label index in [k] of v, or 0 when v is not in S.
    int index_of(Vertex v) const;
};

struct ContextOptions {
    SolverOptions solver;
    /// Replaces the solver-computed minimum weak {2}-dominating function of
    /// G□H (values indexed by flat product vertex).
    std::optional<WeightFunction> d_override;
};

/// Throws DomainError if g has a claw, InternalError if i(g) != γ(g).
std::shared_ptr<const StarContext> build_context(const Graph& g, const Graph& h,
                                                 const ContextOptions& opts = {});

struct ColumnClass {
    enum class Kind {
        own_or_private,  // v ∈ {v_i} ∪ pn(v_i, S)
        shared,          // v ∉ S adjacent to exactly v_i and v_j
    };
    Kind kind = Kind::own_or_private;
    int i = 0;
    int j = 0;  // shared only; i < j
};

/// Throws InternalError if v has no S-neighbour or three or more.
ColumnClass classify_column(const StarContext& ctx, Vertex v);

enum class Rule : int {
    own_or_private = 1,
    both_empty = 2,
    one_empty = 3,
    neither_empty = 4,
    adjacent_equal_pairs = 5,
    adjacent_single_pair = 6,
    fiber_equal_pairs = 7,
    fiber_single_pair = 8,
    fiber_overlapping_pairs = 9,
    fiber_duplicate_single = 10,
    claim1_choice = 11,
};

std::string rule_name(Rule r);

struct TraceRecord {
    Rule rule;
    Copy copy;
    std::optional<Label> old_label;  // nullopt for initial assignments
    Label new_label;

    friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

/// `rule=<id> copy=(g,h,c) old={…} new={…}`
std::string format_trace_record(const TraceRecord& r);
TraceRecord parse_trace_record(std::string_view line);
void write_trace(std::ostream& out, std::span<const TraceRecord> trace);
std::vector<TraceRecord> read_trace(std::istream& in);

class LabelState {
public:
    explicit LabelState(std::shared_ptr<const StarContext> ctx);

    const StarContext& context() const noexcept { return *ctx_; }
    std::shared_ptr<const StarContext> context_ptr() const noexcept { return ctx_; }

    int copies() const noexcept { return static_cast<int>(labels_.size()); }
    const std::optional<Label>& label(int copy) const;
    std::span<const TraceRecord> trace() const noexcept { return trace_; }

    /// Sets the label of a copy and appends a trace record.
    void apply(Rule rule, int copy, Label next);

    bool total() const;
    bool all_singleton() const;
    /// Sum of label sizes over labelled copies.
    int entry_count() const;
    /// Copies whose label currently has two entries, in canonical order.
    std::vector<int> open_copies() const;

    /// Same labels (trace ignored).
    bool same_labels(const LabelState& other) const { return labels_ == other.labels_; }

private:
    std::shared_ptr<const StarContext> ctx_;
    std::vector<std::optional<Label>> labels_;
    std::vector<TraceRecord> trace_;
};

/// Rules 1-4 applied to every copy in canonical order.
LabelState initial_labeling(std::shared_ptr<const StarContext> ctx);

/// Fixpoint of rules 5-9. Each scan walks ordered copy pairs in canonical
/// order, fires the first applicable rule, and restarts.
LabelState finishing_pass(LabelState state);

struct ClassOutcome {
    int index = 0;  // i in [k]
    VertexSet projection;
    bool dominates = false;
    std::optional<Vertex> witness;  // undominated h on failure
};

struct Claim2Report {
    std::vector<ClassOutcome> classes;
    bool all_dominate() const;
};

/// U_i = { h : some copy at (v, h) carries label {i} }.
VertexSet project_label_class(const LabelState& state, int i);
Claim2Report verify_claim2(const LabelState& state);

struct Discrepancy {
    std::string reason;
    int class_index = 0;
    std::optional<Vertex> witness;
    std::vector<TraceRecord> trace;
};

struct Claim1Outcome {
    LabelState state;
    bool success = false;
    int open_labels = 0;           // 2-entry labels left after the fixpoint
    std::uint64_t assignments_tried = 0;
    std::optional<Discrepancy> discrepancy;
};

/// Resolves each remaining 2-entry label to one of its entries, trying the
/// 2^m choice vectors in lexicographic order (smaller entry first) and
/// accepting the first under which every projection dominates H.
/// Throws SizeError when more than 30 labels remain open.
Claim1Outcome resolve_claim1(LabelState state);

/// Labels obtained by applying `trace` to an unlabelled state.
LabelState replay(std::shared_ptr<const StarContext> ctx, std::span<const TraceRecord> trace);

struct PipelineReport {
    std::shared_ptr<const StarContext> context;
    int k = 0;
    int d_size = 0;
    int gamma_h = 0;
    int initial_open = 0;  // 2-entry labels after rules 1-4
    int finishing_steps = 0;
    Claim1Outcome claim1;
    Claim2Report claim2;
    std::vector<int> projection_sizes;
    int projection_total = 0;
    /// |D| >= Σ|U_i| >= k·γ(H), with every |U_i| >= γ(H).
    bool count_holds = false;
    bool passed() const;
};

PipelineReport run_pipeline(const Graph& g, const Graph& h, const ContextOptions& opts = {});

}  // namespace domlab::labeling
