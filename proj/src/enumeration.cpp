#include "zagreb/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "zagreb/errors.hpp"

namespace zagreb {

namespace {

constexpr int kN = kMaxEnumerationOrder;
constexpr double kArgminTolerance = 1e-9;
// Pruning keeps everything within this slack of the incumbent, so no
// candidate that ties at kArgminTolerance is ever cut.
constexpr double kPruneSlack = 4e-9;

using Rows = std::array<std::uint64_t, kN>;
using Degrees = std::array<int, kN>;

void check_budget(int n)
{
    if (n > kMaxEnumerationOrder) {
        const double cost = std::ldexp(1.0, n * (n - 1) / 2);
        throw budget_exceeded("exhaustive enumeration is limited to n <= " + std::to_string(kMaxEnumerationOrder) +
                                  "; n = " + std::to_string(n) + " would visit up to " + std::to_string(cost) +
                                  " labeled graphs",
                              cost);
    }
}

void validate(const ClassSpec & spec)
{
    check_budget(spec.n);
    if (spec.n < 2)
        throw std::invalid_argument("class needs n >= 2");
    if (!spec.degree_sequence.empty()) {
        if (static_cast<int>(spec.degree_sequence.size()) != spec.n)
            throw std::invalid_argument("degree sequence length must equal n");
        for (int d : spec.degree_sequence)
            if (d < 0 || d > spec.n - 1)
                throw std::invalid_argument("degree sequence entry out of range");
        return;
    }
    if (spec.delta < 0 || spec.delta > spec.Delta || spec.Delta > spec.n - 1)
        throw std::invalid_argument("class needs 0 <= delta <= Delta <= n-1");
}


Graph to_graph(const Rows & rows, int n) { return Graph::from_rows(std::span<const std::uint64_t>(rows.data(), n)); }

/// Depth-first search over the upper-triangular adjacency matrix in row
/// order, deciding "absent" before "present" for each pair.
class Backtracker {
public:
    struct Bounding {
        std::vector<double> h;      // h[d], d <= Delta
        std::vector<double> min_h;  // min of h on [a, b], (Delta+1)^2 row-major
        double incumbent = std::numeric_limits<double>::infinity();
    };

    using Leaf = std::function<void(const Rows &, const Degrees &)>;

    Backtracker(const ClassSpec & spec, Bounding * bounding, Leaf leaf)
        : n_(spec.n), delta_(spec.delta), Delta_(spec.Delta), bounding_(bounding), leaf_(std::move(leaf))
    {
        exact_extremes_ = spec.exact_extremes && spec.degree_sequence.empty();
        for (int v = 0; v < n_; ++v) {
            lo_[static_cast<std::size_t>(v)] =
                spec.degree_sequence.empty() ? spec.delta : spec.degree_sequence[static_cast<std::size_t>(v)];
            hi_[static_cast<std::size_t>(v)] =
                spec.degree_sequence.empty() ? spec.Delta : spec.degree_sequence[static_cast<std::size_t>(v)];
        }
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                pairs_.push_back({i, j});
        const std::size_t P = pairs_.size();
        remaining_.assign((P + 1) * kN, 0);
        for (std::size_t q = 0; q < P; ++q)
            for (std::size_t p = q; p < P; ++p) {
                ++remaining_[q * kN + static_cast<std::size_t>(pairs_[p].u)];
                ++remaining_[q * kN + static_cast<std::size_t>(pairs_[p].v)];
            }
        rows_.fill(0);
        deg_.fill(0);
    }

    std::uint64_t leaves() const { return leaves_; }

    void run_all()
    {
        if (node_ok(0))
            dfs(0);
    }

    /// Fix vertex 0's row to `mask` (bit j-1 set means edge {0, j}), then
    /// search the rest.
    void run_with_first_row(std::uint64_t mask)
    {
        const int first = n_ - 1;
        for (int j = 1; j < n_; ++j) {
            if (!(mask >> (j - 1) & 1))
                continue;
            if (deg_[0] >= hi_[0] || deg_[static_cast<std::size_t>(j)] >= hi_[static_cast<std::size_t>(j)])
                return reset();
            set_edge(0, j);
        }
        for (int v = 0; v < n_; ++v)
            if (deg_[static_cast<std::size_t>(v)] + rem(first, v) < lo_[static_cast<std::size_t>(v)])
                return reset();
        if (node_ok(first))
            dfs(first);
        reset();
    }

private:
    struct P {
        int u, v;
    };

    int rem(std::size_t q, int v) const { return remaining_[q * kN + static_cast<std::size_t>(v)]; }

    void set_edge(int u, int v)
    {
        rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        ++deg_[static_cast<std::size_t>(u)];
        ++deg_[static_cast<std::size_t>(v)];
    }

    void clear_edge(int u, int v)
    {
        rows_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
        rows_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
        --deg_[static_cast<std::size_t>(u)];
        --deg_[static_cast<std::size_t>(v)];
    }

    void reset()
    {
        rows_.fill(0);
        deg_.fill(0);
    }

    // Global checks: extremes still reachable, and the lower bound on the
    // rule does not exceed the incumbent.
    bool node_ok(std::size_t q) const
    {
        if (!exact_extremes_ && !bounding_)
            return true;
        bool can_min = false, can_max = false;
        double lb = 0.0;
        for (int v = 0; v < n_; ++v) {
            const int d = deg_[static_cast<std::size_t>(v)];
            const int a = std::max(d, lo_[static_cast<std::size_t>(v)]);
            const int b = std::min(hi_[static_cast<std::size_t>(v)], d + rem(q, v));
            can_min |= a == delta_;
            can_max |= b == Delta_;
            if (bounding_)
                lb += bounding_->min_h[static_cast<std::size_t>(a * (Delta_ + 1) + b)];
        }
        if (exact_extremes_ && !(can_min && can_max))
            return false;
        if (bounding_ && lb > bounding_->incumbent + kPruneSlack * (1.0 + std::fabs(bounding_->incumbent)))
            return false;
        return true;
    }

    void dfs(std::size_t p)
    {
        if (p == pairs_.size()) {
            if (exact_extremes_) {
                const auto [mn, mx] = std::minmax_element(deg_.begin(), deg_.begin() + n_);
                if (*mn != delta_ || *mx != Delta_)
                    return;
            }
            ++leaves_;
            leaf_(rows_, deg_);
            return;
        }
        const int i = pairs_[p].u, j = pairs_[p].v;
        const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
        if (deg_[si] + rem(p + 1, i) >= lo_[si] && deg_[sj] + rem(p + 1, j) >= lo_[sj] && node_ok(p + 1))
            dfs(p + 1);
        if (deg_[si] < hi_[si] && deg_[sj] < hi_[sj]) {
            set_edge(i, j);
            if (node_ok(p + 1))
                dfs(p + 1);
            clear_edge(i, j);
        }
    }

    int n_, delta_, Delta_;
    bool exact_extremes_ = true;
    Bounding * bounding_;
    Leaf leaf_;
    std::array<int, kN> lo_{}, hi_{};
    std::vector<P> pairs_;
    std::vector<int> remaining_;
    Rows rows_{};
    Degrees deg_{};
    std::uint64_t leaves_ = 0;
};

struct Candidate {
    double value;
    Rows rows;
};

struct TaskResult {
    std::vector<Candidate> candidates;
    std::uint64_t leaves = 0;
};

DegreeHistogram histogram_of(const Rows & rows, int n)
{
    DegreeHistogram h;
    for (int v = 0; v < n; ++v)
        h.add(std::popcount(rows[static_cast<std::size_t>(v)]));
    return h;
}

TaskResult run_task(const VertexIndexSpec & spec, int n, int delta, int Delta, std::uint64_t first_row)
{
    Backtracker::Bounding bounding;
    bounding.h.assign(static_cast<std::size_t>(Delta + 1), std::numeric_limits<double>::infinity());
    for (int d = std::max(delta, 1); d <= Delta; ++d)
        bounding.h[static_cast<std::size_t>(d)] = spec.at(d);
    bounding.min_h.assign(static_cast<std::size_t>((Delta + 1) * (Delta + 1)), std::numeric_limits<double>::infinity());
    for (int a = 0; a <= Delta; ++a) {
        double m = std::numeric_limits<double>::infinity();
        for (int b = a; b <= Delta; ++b) {
            m = std::min(m, bounding.h[static_cast<std::size_t>(b)]);
            bounding.min_h[static_cast<std::size_t>(a * (Delta + 1) + b)] = m;
        }
    }

    TaskResult result;
    std::size_t clean_at = 1024;
    ClassSpec cls;
    cls.n = n;
    cls.delta = delta;
    cls.Delta = Delta;
    Backtracker bt(cls, &bounding, [&](const Rows & rows, const Degrees & deg) {
        std::array<int, kN> counts{};
        for (int v = 0; v < n; ++v)
            ++counts[static_cast<std::size_t>(deg[static_cast<std::size_t>(v)])];
        double value = 0.0;
        for (int d = 1; d <= Delta; ++d)
            if (counts[static_cast<std::size_t>(d)])
                value += counts[static_cast<std::size_t>(d)] * bounding.h[static_cast<std::size_t>(d)];
        const double slack = kPruneSlack * (1.0 + std::fabs(bounding.incumbent));
        if (value > bounding.incumbent + slack)
            return;
        if (value < bounding.incumbent)
            bounding.incumbent = value;
        result.candidates.push_back({value, rows});
        if (result.candidates.size() >= clean_at) {
            const double limit = bounding.incumbent + kPruneSlack * (1.0 + std::fabs(bounding.incumbent));
            std::erase_if(result.candidates, [&](const Candidate & c) { return c.value > limit; });
            clean_at = std::max<std::size_t>(1024, 2 * result.candidates.size());
        }
    });
    bt.run_with_first_row(first_row);
    result.leaves = bt.leaves();
    return result;
}

}  // namespace

double estimated_cost(const ClassSpec & spec) { return std::ldexp(1.0, spec.n * (spec.n - 1) / 2); }

std::uint64_t enumerate_graphs(const ClassSpec & spec, const std::function<void(const Graph &)> & visit)
{
    validate(spec);
    std::set<CanonicalForm> seen;
    std::uint64_t visited = 0;
    Backtracker bt(spec, nullptr, [&](const Rows & rows, const Degrees &) {
        Graph g = to_graph(rows, spec.n);
        if (spec.up_to_iso) {
            if (!seen.insert(canonical_form(g)).second)
                return;
            g = canonical_graph(g);
        }
        ++visited;
        visit(g);
    });
    bt.run_all();
    return visited;
}

std::vector<Graph> collect_graphs(const ClassSpec & spec)
{
    std::vector<Graph> out;
    enumerate_graphs(spec, [&](const Graph & g) { out.push_back(g); });
    return out;
}

MinimumResult min_index_over_class(const VertexIndexSpec & spec, int delta, int Delta, int n_lo, int n_hi,
                                   const SearchOptions & options)
{
    if (spec.mode() != IndexMode::additive_vertex)
        throw std::invalid_argument("min_index_over_class takes an additive rule; transform multiplicative rules "
                                    "with log_transformed()");
    if (delta < 1 || delta > Delta)
        throw std::invalid_argument("need 1 <= delta <= Delta");
    if (n_lo > n_hi)
        throw std::invalid_argument("empty vertex-count range");
    check_budget(n_hi);
    for (int d = delta; d <= Delta; ++d)
        (void)spec.at(d);  // domain check up front

    struct Task {
        int n;
        std::uint64_t mask;
    };
    std::vector<Task> tasks;
    for (int n = std::max(n_lo, Delta + 1); n <= n_hi; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
            const int d0 = std::popcount(mask);
            if (d0 >= delta && d0 <= Delta)
                tasks.push_back({n, mask});
        }

    std::vector<TaskResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();)
            results[k] = run_task(spec, tasks[k].n, delta, Delta, tasks[k].mask);
    };
    const int workers = std::max(1, options.workers);
    if (workers == 1) {
        worker();
    }
    else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker);
    }

    MinimumResult out;
    // Per-order merge, in task order.
    std::map<int, std::vector<std::pair<DegreeHistogram, const Rows *>>> by_order;
    std::map<int, OrderMinimum> orders;
    for (int n = n_lo; n <= n_hi; ++n)
        orders[n] = OrderMinimum{n};
    for (std::size_t k = 0; k < tasks.size(); ++k) {
        auto & om = orders[tasks[k].n];
        om.leaves_visited += results[k].leaves;
        for (const auto & c : results[k].candidates)
            by_order[tasks[k].n].emplace_back(histogram_of(c.rows, tasks[k].n), &c.rows);
    }

    std::optional<DegreeHistogram> best;
    std::vector<std::pair<int, const Rows *>> labeled;
    for (auto & [n, cands] : by_order) {
        if (cands.empty())
            continue;
        DegreeHistogram order_best = cands.front().first;
        for (const auto & [h, rows] : cands)
            if (compare_histograms(spec, h, order_best, kArgminTolerance) < 0)
                order_best = h;
        auto & om = orders[n];
        om.empty = false;
        om.minimum = eval_vertex_index(spec, order_best);
        for (const auto & [h, rows] : cands)
            if (compare_histograms(spec, h, order_best, kArgminTolerance) == 0)
                ++om.labeled_argmins;

        if (!best || compare_histograms(spec, order_best, *best, kArgminTolerance) < 0) {
            best = order_best;
            labeled.clear();
        }
        if (compare_histograms(spec, order_best, *best, kArgminTolerance) == 0)
            for (const auto & [h, rows] : cands)
                if (compare_histograms(spec, h, *best, kArgminTolerance) == 0)
                    labeled.emplace_back(n, rows);
    }

    for (const auto & [n, om] : orders) {
        out.per_order.push_back(om);
        out.leaves_visited += om.leaves_visited;
    }
    if (!best)
        return out;

    out.empty = false;
    out.minimum = eval_vertex_index(spec, *best);
    out.exact_minimum = exact_value(spec, *best);
    out.labeled_argmins = labeled.size();
    std::map<CanonicalForm, DegreeHistogram> classes;
    for (const auto & [n, rows] : labeled) {
        const Graph g = to_graph(*rows, n);
        classes.emplace(canonical_form(g), DegreeHistogram::of(g));
    }
    for (const auto & [form, hist] : classes) {
        out.argmins.push_back(form);
        out.argmin_histograms.push_back(hist);
    }
    return out;
}

}  // namespace zagreb
