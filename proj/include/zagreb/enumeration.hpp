#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zagreb/canonical.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/index.hpp"

namespace zagreb {

inline constexpr int kMaxEnumerationOrder = 10;

/// A class of labeled graphs on n vertices with minimum degree delta and
/// maximum degree Delta.
struct ClassSpec {
    int n = 2;
    int delta = 1;
    int Delta = 1;
    bool up_to_iso = false;
    /// When false, degrees only need to lie in [delta, Delta]; the minimum
    /// and maximum need not be attained.
    bool exact_extremes = true;
    /// Optional exact degree per label; overrides [delta, Delta] per vertex.
    std::vector<int> degree_sequence;
};

/// Worst-case number of leaves: 2^(n(n-1)/2).
double estimated_cost(const ClassSpec & spec);

/// Visit every graph of the class (one per isomorphism class, as its
/// canonical graph, when up_to_iso is set). Returns the number visited.
/// Throws budget_exceeded for n > kMaxEnumerationOrder.
std::uint64_t enumerate_graphs(const ClassSpec & spec, const std::function<void(const Graph &)> & visit);

std::vector<Graph> collect_graphs(const ClassSpec & spec);

struct SearchOptions {
    int workers = 1;
};

struct OrderMinimum {
    int n = 0;
    bool empty = true;
    double minimum = 0.0;
    std::uint64_t labeled_argmins = 0;
    std::uint64_t leaves_visited = 0;
};

struct MinimumResult {
    bool empty = true;
    double minimum = 0.0;
    std::optional<ExactValue> exact_minimum;
    /// Sorted canonical forms of the minimising isomorphism classes, with
    /// the degree histogram of each.
    std::vector<CanonicalForm> argmins;
    std::vector<DegreeHistogram> argmin_histograms;
    std::vector<OrderMinimum> per_order;
    std::uint64_t labeled_argmins = 0;
    std::uint64_t leaves_visited = 0;
};

/// Exact minimum of an additive rule over all graphs with minimum degree
/// delta, maximum degree Delta and n_lo <= n <= n_hi vertices. Orders with
/// no such graph are reported empty and skipped. The result does not
/// depend on the worker count.
MinimumResult min_index_over_class(const VertexIndexSpec & spec, int delta, int Delta, int n_lo, int n_hi,
                                   const SearchOptions & options = {});

}  // namespace zagreb
