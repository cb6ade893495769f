#include "zagreb/canonical.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "zagreb/errors.hpp"
#include "zagreb/graph_io.hpp"

namespace zagreb {

namespace {

// Lexicographic minimisation over placements: position j contributes the j
// bits adj(order[0], v) .. adj(order[j-1], v), packed with the earliest
// position as the most significant bit. Only candidates achieving the
// smallest column can lead to the minimum; among those, twins (vertices
// whose transposition is an automorphism) give identical subtrees.
class Canonicaliser {
public:
    explicit Canonicaliser(const Graph & g) : g_(g), n_(g.order())
    {
        order_.assign(static_cast<std::size_t>(n_), 0);
        cols_.assign(static_cast<std::size_t>(n_), 0);
        best_cols_.assign(static_cast<std::size_t>(n_), 0);
    }

    std::vector<Vertex> run()
    {
        search(0, 0);
        return best_order_;
    }

private:
    bool twins(Vertex u, Vertex v) const
    {
        const std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
        return (g_.neighbours(u) & mask) == (g_.neighbours(v) & mask);
    }

    // -1, 0, +1: current prefix of length j versus the best prefix.
    int compare_prefix(int j) const
    {
        for (int k = 1; k < j; ++k) {
            const auto a = cols_[static_cast<std::size_t>(k)], b = best_cols_[static_cast<std::size_t>(k)];
            if (a != b)
                return a < b ? -1 : 1;
        }
        return 0;
    }

    void search(int j, std::uint64_t used)
    {
        if (have_best_ && compare_prefix(j) > 0)
            return;
        if (j == n_) {
            if (!have_best_ || compare_prefix(n_) < 0) {
                best_cols_ = cols_;
                best_order_ = order_;
                have_best_ = true;
            }
            return;
        }

        std::uint64_t min_col = ~std::uint64_t{0};
        std::vector<std::pair<Vertex, std::uint64_t>> cand;
        for (Vertex v = 0; v < n_; ++v) {
            if (used & (std::uint64_t{1} << v))
                continue;
            std::uint64_t col = 0;
            const std::uint64_t nb = g_.neighbours(v);
            for (int i = 0; i < j; ++i)
                col = (col << 1) | ((nb >> order_[static_cast<std::size_t>(i)]) & 1);
            cand.emplace_back(v, col);
            if (col < min_col)
                min_col = col;
        }
        if (have_best_ && compare_prefix(j) == 0 && j > 0 && min_col > best_cols_[static_cast<std::size_t>(j)])
            return;

        std::vector<Vertex> kept;
        for (const auto & [v, col] : cand) {
            if (col != min_col)
                continue;
            bool duplicate = false;
            for (Vertex u : kept)
                if (twins(u, v)) {
                    duplicate = true;
                    break;
                }
            if (duplicate)
                continue;
            kept.push_back(v);
            order_[static_cast<std::size_t>(j)] = v;
            cols_[static_cast<std::size_t>(j)] = col;
            search(j + 1, used | (std::uint64_t{1} << v));
        }
    }

    const Graph & g_;
    int n_;
    std::vector<Vertex> order_;
    std::vector<std::uint64_t> cols_;
    std::vector<std::uint64_t> best_cols_;
    std::vector<Vertex> best_order_;
    bool have_best_ = false;
};

}  // namespace

std::vector<Vertex> canonical_order(const Graph & g)
{
    if (g.order() > kMaxCanonicalOrder)
        throw unsupported_size("canonical form supports at most " + std::to_string(kMaxCanonicalOrder) +
                               " vertices, got " + std::to_string(g.order()));
    return Canonicaliser(g).run();
}

Graph canonical_graph(const Graph & g)
{
    const auto order = canonical_order(g);
    std::vector<Vertex> perm(order.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        perm[static_cast<std::size_t>(order[pos])] = static_cast<Vertex>(pos);
    return g.relabeled(perm);
}

CanonicalForm canonical_form(const Graph & g) { return {to_graph6(canonical_graph(g))}; }

bool isomorphic(const Graph & a, const Graph & b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    if (sorted_degrees(a) != sorted_degrees(b))
        return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace zagreb
