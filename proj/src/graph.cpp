#include "zagreb/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zagreb {

namespace {

void check_order(int n)
{
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [1, " + std::to_string(kMaxVertices) +
                                    "], got " + std::to_string(n));
}

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

Graph::Graph(int n) : n_(n)
{
    check_order(n);
    rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    GraphBuilder b(n);
    for (const auto & e : edges) {
        if (b.adjacent(e.u, e.v))
            throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "}");
        b.add_edge(e.u, e.v);
    }
    *this = b.build();
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
{
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows)
{
    const int n = static_cast<int>(rows.size());
    Graph g(n);
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
    int twice_m = 0;
    for (int v = 0; v < n; ++v) {
        const std::uint64_t r = rows[static_cast<std::size_t>(v)];
        if (r & bit(v))
            throw std::invalid_argument("loop at vertex " + std::to_string(v));
        if (r & ~all)
            throw std::invalid_argument("neighbour out of range at vertex " + std::to_string(v));
        for (std::uint64_t rest = r; rest; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            if (!(rows[static_cast<std::size_t>(u)] & bit(v)))
                throw std::invalid_argument("asymmetric adjacency between " + std::to_string(u) +
                                            " and " + std::to_string(v));
        }
        twice_m += std::popcount(r);
        g.rows_[static_cast<std::size_t>(v)] = r;
    }
    g.m_ = twice_m / 2;
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("vertex out of range");
    return (rows_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

int Graph::degree(Vertex v) const { return std::popcount(neighbours(v)); }

std::uint64_t Graph::neighbours(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex out of range");
    return rows_[static_cast<std::size_t>(v)];
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (std::uint64_t rest = rows_[static_cast<std::size_t>(u)] & ~(bit(u + 1) - 1); rest;
             rest &= rest - 1)
            out.push_back({u, std::countr_zero(rest)});
    return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size does not match graph order");
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (Vertex p : perm) {
        if (p < 0 || p >= n_ || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
    for (int u = 0; u < n_; ++u)
        for (std::uint64_t rest = rows_[static_cast<std::size_t>(u)]; rest; rest &= rest - 1)
            rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] |=
                bit(perm[static_cast<std::size_t>(std::countr_zero(rest))]);
    return from_rows(rows);
}

Graph Graph::complement() const
{
    const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1;
    std::vector<std::uint64_t> rows(rows_.size());
    for (int v = 0; v < n_; ++v)
        rows[static_cast<std::size_t>(v)] = ~rows_[static_cast<std::size_t>(v)] & all & ~bit(v);
    return from_rows(rows);
}

bool Graph::is_connected() const
{
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t rest = frontier; rest; rest &= rest - 1)
            next |= rows_[static_cast<std::size_t>(std::countr_zero(rest))];
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == n_;
}

GraphBuilder::GraphBuilder(int n) : n_(n)
{
    check_order(n);
    rows_.assign(static_cast<std::size_t>(n), 0);
}

GraphBuilder::GraphBuilder(const Graph & g) : n_(g.order()), rows_(g.rows().begin(), g.rows().end()) {}

void GraphBuilder::check_pair(Vertex u, Vertex v) const
{
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("vertex out of range");
    if (u == v)
        throw std::invalid_argument("loop at vertex " + std::to_string(u));
}

bool GraphBuilder::adjacent(Vertex u, Vertex v) const
{
    check_pair(u, v);
    return (rows_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

GraphBuilder & GraphBuilder::add_edge(Vertex u, Vertex v)
{
    check_pair(u, v);
    rows_[static_cast<std::size_t>(u)] |= bit(v);
    rows_[static_cast<std::size_t>(v)] |= bit(u);
    return *this;
}

GraphBuilder & GraphBuilder::remove_edge(Vertex u, Vertex v)
{
    check_pair(u, v);
    rows_[static_cast<std::size_t>(u)] &= ~bit(v);
    rows_[static_cast<std::size_t>(v)] &= ~bit(u);
    return *this;
}

Graph GraphBuilder::build() const { return Graph::from_rows(rows_); }

DegreeProfile degree_profile(const Graph & g)
{
    DegreeProfile p;
    p.degrees.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        p.degrees.push_back(g.degree(v));
    const auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *lo;
    p.max_degree = *hi;
    p.edge_count = g.size();
    return p;
}

std::vector<int> sorted_degrees(const Graph & g)
{
    auto d = degree_profile(g).degrees;
    std::sort(d.begin(), d.end());
    return d;
}

Graph complete_graph(int k)
{
    if (k < 1)
        throw std::invalid_argument("complete_graph requires k >= 1");
    GraphBuilder b(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            b.add_edge(u, v);
    return b.build();
}

Graph cycle_complement(int k)
{
    if (k < 5)
        throw std::invalid_argument("cycle_complement requires k >= 5");
    GraphBuilder b(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            if (v != u + 1 && !(u == 0 && v == k - 1))
                b.add_edge(u, v);
    return b.build();
}

std::optional<Graph> realize_degree_sequence(std::span<const int> seq)
{
    const int n = static_cast<int>(seq.size());
    if (n == 0 || n > kMaxVertices)
        return std::nullopt;
    std::vector<int> residual(seq.begin(), seq.end());
    for (int d : residual)
        if (d < 0 || d >= n)
            return std::nullopt;
    if (std::accumulate(residual.begin(), residual.end(), 0) % 2 != 0)
        return std::nullopt;

    // Highest residual first, lowest label on ties.
    auto before = [&](int a, int b) {
        return residual[static_cast<std::size_t>(a)] != residual[static_cast<std::size_t>(b)]
                   ? residual[static_cast<std::size_t>(a)] > residual[static_cast<std::size_t>(b)]
                   : a < b;
    };

    GraphBuilder b(n);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (;;) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), before);
        const int v = order.front();
        const int need = residual[static_cast<std::size_t>(v)];
        if (need == 0)
            break;
        residual[static_cast<std::size_t>(v)] = 0;
        for (int k = 1; k <= need; ++k) {
            const int u = order[static_cast<std::size_t>(k)];
            if (residual[static_cast<std::size_t>(u)] == 0)
                return std::nullopt;
            --residual[static_cast<std::size_t>(u)];
            b.add_edge(v, u);
        }
    }
    return b.build();
}

}  // namespace zagreb
