#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace zagreb {

inline constexpr int kMaxVertices = 64;

using Vertex = int;

struct Edge {
    Vertex u;
    Vertex v;

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Simple undirected graph on vertices 0..n-1, stored as one adjacency
/// bitmask per vertex. Values are immutable once built.
class Graph {
public:
    /// Edgeless graph on `n` vertices.
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    /// Build from symmetric, loop-free adjacency rows.
    static Graph from_rows(std::span<const std::uint64_t> rows);

    int order() const noexcept { return n_; }
    int size() const noexcept { return m_; }

    bool adjacent(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    std::uint64_t neighbours(Vertex v) const;
    std::span<const std::uint64_t> rows() const noexcept { return rows_; }

    /// Edges with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    /// The graph in which old vertex v becomes perm[v].
    Graph relabeled(std::span<const Vertex> perm) const;

    Graph complement() const;
    bool is_connected() const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> rows_;

    friend class GraphBuilder;
};

/// Mutable staging area for constructions; `build()` freezes the result.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const Graph & g);

    int order() const noexcept { return n_; }
    bool adjacent(Vertex u, Vertex v) const;
    GraphBuilder & add_edge(Vertex u, Vertex v);
    GraphBuilder & remove_edge(Vertex u, Vertex v);
    Graph build() const;

private:
    void check_pair(Vertex u, Vertex v) const;

    int n_;
    std::vector<std::uint64_t> rows_;
};

struct DegreeProfile {
    std::vector<int> degrees;  // degrees[v] for each vertex v
    int min_degree = 0;
    int max_degree = 0;
    int edge_count = 0;
};

DegreeProfile degree_profile(const Graph & g);

/// Degree multiset as a non-decreasing vector.
std::vector<int> sorted_degrees(const Graph & g);

Graph complete_graph(int k);

/// Complement of the cycle 0-1-...-(k-1)-0; (k-3)-regular.
Graph cycle_complement(int k);

/// Havel-Hakimi realization: vertex i receives degree seq[i]. The vertex
/// with the highest residual degree (lowest label on ties) is connected to
/// the next highest residuals (lowest labels on ties). Returns nullopt when
/// the sequence is not graphical.
std::optional<Graph> realize_degree_sequence(std::span<const int> seq);

}  // namespace zagreb
