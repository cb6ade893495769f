#pragma once

#include <compare>
#include <string>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

inline constexpr int kMaxCanonicalOrder = 12;

/// Canonical encoding of an isomorphism class: the graph6 string of the
/// relabeling whose upper-triangular adjacency bits, read in graph6 column
/// order, are lexicographically smallest over all vertex permutations.
struct CanonicalForm {
    std::string graph6;

    friend auto operator<=>(const CanonicalForm &, const CanonicalForm &) = default;
};

/// order[pos] is the original vertex placed at position pos.
std::vector<Vertex> canonical_order(const Graph & g);

CanonicalForm canonical_form(const Graph & g);
Graph canonical_graph(const Graph & g);
bool isomorphic(const Graph & a, const Graph & b);

}  // namespace zagreb
