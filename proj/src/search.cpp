#include "search.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace domlab::detail {

namespace {

std::vector<std::vector<Vertex>> closed_lists(const Graph& g)
{
    std::vector<std::vector<Vertex>> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        out[v] = g.neighbors(v).members();
        out[v].insert(std::lower_bound(out[v].begin(), out[v].end(), v), v);
    }
    return out;
}

class LexEngine {
public:
    LexEngine(const Graph& g, const LexProblem& p, std::optional<int> target, SearchControl& control)
        : p_(p), n_(g.order()), closed_(closed_lists(g)), target_(target), control_(control),
          val_(n_, 0), sum_(n_, 0), undecided_(n_, 0), mark_(n_, 0)
    {
        for (Vertex v = 0; v < n_; ++v) {
            undecided_[v] = static_cast<int>(closed_[v].size());
            max_closed_ = std::max(max_closed_, undecided_[v]);
        }
        best_weight_ = target_ ? *target_ + 1 : std::numeric_limits<int>::max();
    }

    std::optional<std::vector<int>> run()
    {
        dfs(0);
        if (!found_)
            return std::nullopt;
        return best_;
    }

private:
    bool satisfiable(Vertex w, Vertex frontier) const
    {
        const bool decided = w < frontier;
        if (p_.coverage == LexProblem::Coverage::zero_vertices && (!decided || val_[w] > 0))
            return true;
        return sum_[w] + p_.max_value * undecided_[w] >= p_.need;
    }

    int deficit(Vertex w, Vertex frontier) const
    {
        if (sum_[w] >= p_.need)
            return 0;
        if (p_.coverage == LexProblem::Coverage::every_vertex)
            return p_.need - sum_[w];
        if (w >= frontier)
            return 1;  // f(w) >= 1 settles it
        return val_[w] > 0 ? 0 : p_.need - sum_[w];
    }

    // Remaining weight is at least the summed deficits of vertices whose
    // undecided closed neighbourhoods are pairwise disjoint, and at least
    // total deficit over the largest closed neighbourhood.
    int lower_bound(Vertex frontier)
    {
        if (++stamp_ == std::numeric_limits<int>::max()) {
            std::fill(mark_.begin(), mark_.end(), 0);
            stamp_ = 1;
        }
        int packed = 0;
        long long total = 0;
        for (Vertex w = 0; w < n_; ++w) {
            const int d = deficit(w, frontier);
            if (d == 0)
                continue;
            total += d;
            bool disjoint = true;
            for (Vertex u : closed_[w])
                if (u >= frontier && mark_[u] == stamp_) {
                    disjoint = false;
                    break;
                }
            if (!disjoint)
                continue;
            for (Vertex u : closed_[w])
                if (u >= frontier)
                    mark_[u] = stamp_;
            packed += d;
        }
        const int spread = static_cast<int>((total + max_closed_ - 1) / max_closed_);
        return std::max(packed, spread);
    }

    void assign(Vertex t, int x)
    {
        val_[t] = x;
        weight_ += x;
        for (Vertex w : closed_[t]) {
            sum_[w] += x;
            --undecided_[w];
        }
    }

    void unassign(Vertex t)
    {
        const int x = val_[t];
        weight_ -= x;
        for (Vertex w : closed_[t]) {
            sum_[w] -= x;
            ++undecided_[w];
        }
        val_[t] = 0;
    }

    void dfs(Vertex t)
    {
        control_.tick();
        if (t == n_) {
            if (weight_ < best_weight_ || (target_ && weight_ == *target_)) {
                best_weight_ = weight_;
                best_ = val_;
                found_ = true;
                if (target_)
                    done_ = true;
            }
            return;
        }
        int hi = p_.max_value;
        if (p_.independent)
            for (Vertex w : closed_[t])
                if (w < t && val_[w] > 0) {
                    hi = 0;
                    break;
                }
        for (int x = hi; x >= 0 && !done_; --x) {
            assign(t, x);
            bool ok = true;
            for (Vertex w : closed_[t])
                if (!satisfiable(w, t + 1)) {
                    ok = false;
                    break;
                }
            if (ok) {
                const int bound = weight_ + lower_bound(t + 1);
                ok = target_ ? bound <= *target_ : bound < best_weight_;
            }
            if (ok)
                dfs(t + 1);
            unassign(t);
        }
    }

    LexProblem p_;
    int n_;
    std::vector<std::vector<Vertex>> closed_;
    std::optional<int> target_;
    SearchControl& control_;

    std::vector<int> val_;
    std::vector<int> sum_;
    std::vector<int> undecided_;
    std::vector<int> mark_;
    int stamp_ = 0;
    int max_closed_ = 1;
    int weight_ = 0;

    int best_weight_;
    std::vector<int> best_;
    bool found_ = false;
    bool done_ = false;
};

// Covering-style branch and bound over a degree-sorted copy of the graph.
class SetEngine {
public:
    SetEngine(const Graph& g, SetKind kind, SearchControl& control)
        : kind_(kind), n_(g.order()), control_(control), closed_(closed_lists(g)),
          chosen_(n_, 0), excluded_(n_, 0), hits_(n_, 0), mark_(n_, 0)
    {
        best_ = n_ + 1;
    }

    int run()
    {
        rec(0);
        return best_;
    }

private:
    bool is_two() const { return kind_ == SetKind::two_dominating; }

    // Vertex still needs something from the search.
    bool unsatisfied(Vertex v) const
    {
        if (is_two())
            return !chosen_[v] && hits_[v] < 2;
        return hits_[v] == 0;
    }

    // How many more chosen vertices the closed neighbourhood of v needs.
    int deficit(Vertex v) const
    {
        if (!unsatisfied(v))
            return 0;
        if (is_two())
            return excluded_[v] ? 2 - hits_[v] : 1;
        return 1;
    }

    bool candidate(Vertex u) const { return !excluded_[u] && !chosen_[u]; }

    void choose(Vertex c)
    {
        chosen_[c] = 1;
        for (Vertex w : closed_[c])
            if (w != c || !is_two())
                ++hits_[w];
    }

    void unchoose(Vertex c)
    {
        chosen_[c] = 0;
        for (Vertex w : closed_[c])
            if (w != c || !is_two())
                --hits_[w];
    }

    // Returns -1 when some vertex can no longer be satisfied.
    int lower_bound()
    {
        ++stamp_;
        int packed = 0;
        int total = 0;
        for (Vertex v = 0; v < n_; ++v) {
            const int d = deficit(v);
            if (d == 0)
                continue;
            total += d;
            int available = 0;
            bool disjoint = true;
            for (Vertex u : closed_[v]) {
                if (!candidate(u))
                    continue;
                ++available;
                if (mark_[u] == stamp_)
                    disjoint = false;
            }
            if (available < d)
                return -1;
            if (!disjoint)
                continue;
            for (Vertex u : closed_[v])
                if (candidate(u))
                    mark_[u] = stamp_;
            packed += d;
        }
        if (total == 0)
            return 0;
        int cover = 0;
        for (Vertex u = 0; u < n_; ++u) {
            if (!candidate(u))
                continue;
            int c = 0;
            for (Vertex w : closed_[u])
                if (deficit(w) > 0)
                    ++c;
            cover = std::max(cover, c);
        }
        if (cover == 0)
            return -1;
        return std::max(packed, (total + cover - 1) / cover);
    }

    void rec(int size)
    {
        control_.tick();
        Vertex v = -1;
        for (Vertex w = 0; w < n_; ++w)
            if (unsatisfied(w)) {
                v = w;
                break;
            }
        if (v == -1) {
            best_ = std::min(best_, size);
            return;
        }
        const int lb = lower_bound();
        if (lb < 0 || size + lb >= best_)
            return;

        std::vector<Vertex> cands;
        for (Vertex u : closed_[v])
            if (candidate(u))
                cands.push_back(u);
        std::vector<int> gain(n_, 0);
        for (Vertex u : cands)
            for (Vertex w : closed_[u])
                if (deficit(w) > 0)
                    ++gain[u];
        std::stable_sort(cands.begin(), cands.end(),
                         [&](Vertex a, Vertex b) { return gain[a] > gain[b]; });

        std::vector<Vertex> newly_excluded;
        for (Vertex c : cands) {
            choose(c);
            std::vector<Vertex> blocked;
            if (kind_ == SetKind::independent_dominating)
                for (Vertex w : closed_[c])
                    if (w != c && !excluded_[w]) {
                        excluded_[w] = 1;
                        blocked.push_back(w);
                    }
            rec(size + 1);
            for (Vertex w : blocked)
                excluded_[w] = 0;
            unchoose(c);
            excluded_[c] = 1;
            newly_excluded.push_back(c);
            if (size + 1 >= best_)
                break;
        }
        for (Vertex c : newly_excluded)
            excluded_[c] = 0;
    }

    SetKind kind_;
    int n_;
    SearchControl& control_;
    std::vector<std::vector<Vertex>> closed_;
    std::vector<char> chosen_;
    std::vector<char> excluded_;
    std::vector<int> hits_;  // chosen vertices in N[v] (N(v) for 2-domination)
    std::vector<int> mark_;
    int stamp_ = 0;
    int best_;
};

}  // namespace

std::optional<std::vector<int>> lex_search(const Graph& g, const LexProblem& problem,
                                           std::optional<int> target, SearchControl& control)
{
    return LexEngine(g, problem, target, control).run();
}

int set_branch_and_bound(const Graph& g, SetKind kind, SearchControl& control)
{
    std::vector<Vertex> by_degree(g.order());
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<Vertex> perm(g.order());
    for (int pos = 0; pos < g.order(); ++pos)
        perm[by_degree[pos]] = pos;
    return SetEngine(relabel(g, perm), kind, control).run();
}

}  // namespace domlab::detail
