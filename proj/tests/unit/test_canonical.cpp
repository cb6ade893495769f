#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "brute.hpp"
#include "zagreb/canonical.hpp"
#include "zagreb/errors.hpp"
#include "zagreb/graph_io.hpp"

using namespace zagreb;

namespace {

brute::Matrix to_matrix(const Graph & g)
{
    const int n = g.order();
    brute::Matrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g.adjacent(i, j) ? 1 : 0;
    return m;
}

Graph from_matrix(const brute::Matrix & m)
{
    const int n = static_cast<int>(m.size());
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                e.push_back({i, j});
    return Graph(n, e);
}

std::string identity_bits(const Graph & g)
{
    std::vector<int> id(static_cast<std::size_t>(g.order()));
    std::iota(id.begin(), id.end(), 0);
    return brute::column_bits(to_matrix(g), id);
}

}  // namespace

TEST_CASE("canonical graph realises the all-permutation minimum")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 400; ++t) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
        const auto m = brute::random_matrix(n, p, rng);
        const Graph c = canonical_graph(from_matrix(m));
        CHECK(identity_bits(c) == brute::canonical_bits(m));
        CHECK(canonical_form(from_matrix(m)).graph6 == to_graph6(c));
    }
}

TEST_CASE("relabeling never changes the canonical form")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const Graph g = from_matrix(brute::random_matrix(n, 0.4, rng));
        std::vector<Vertex> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(g) == canonical_form(g.relabeled(perm)));
        CHECK(isomorphic(g, g.relabeled(perm)));
    }
}

TEST_CASE("class counts on 5 vertices match brute force")
{
    std::set<std::string> brute_classes, classes;
    brute::for_each_labeled(5, [&](const brute::Matrix & m) {
        brute_classes.insert(brute::canonical_bits(m));
        classes.insert(canonical_form(from_matrix(m)).graph6);
    });
    CHECK(brute_classes.size() == 34);
    CHECK(classes.size() == 34);
}

TEST_CASE("highly symmetric graphs stay fast and correct")
{
    const Graph k = complete_graph(12);
    CHECK(canonical_form(k).graph6 == to_graph6(k));
    const Graph e(12);
    CHECK(canonical_form(e).graph6 == to_graph6(e));
    const Graph c = cycle_complement(12);
    CHECK(isomorphic(c, c.complement().complement()));
    CHECK_FALSE(isomorphic(Graph(4, {{0, 1}, {1, 2}, {2, 3}}), Graph(4, {{0, 1}, {0, 2}, {0, 3}})));
    CHECK_THROWS_AS(canonical_form(Graph(13)), unsupported_size);
}
