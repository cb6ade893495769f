#include <doctest.h>

#include <cmath>
#include <random>

#include "brute.hpp"
#include "zagreb/errors.hpp"
#include "zagreb/index.hpp"

using namespace zagreb;

namespace {

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

VertexIndexSpec vertex(const IndexSpec & s) { return std::get<VertexIndexSpec>(s); }

const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});

}  // namespace

TEST_CASE("catalog values on small graphs")
{
    CHECK(eval_vertex_index(vertex(parse_index("m1_alpha:1")), k3) == 12);
    CHECK(eval_vertex_index(vertex(catalog("first_zagreb")), star) == 12);
    CHECK(eval_vertex_index(vertex(catalog("forgotten")), star) == doctest::Approx(30));
    CHECK(eval_vertex_index(vertex(catalog("inverse_ID")), star) == doctest::Approx(3 + 1.0 / 3));
    CHECK(eval_edge_index(std::get<EdgeIndexSpec>(catalog("second_zagreb")), star) == 9);
    CHECK(eval_edge_index(std::get<EdgeIndexSpec>(catalog("randic")), star) == doctest::Approx(std::sqrt(3.0)));
    CHECK(eval_edge_index(std::get<EdgeIndexSpec>(catalog("modified_zagreb")), k3) == doctest::Approx(0.75));
    const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(eval_vertex_index(vertex(catalog("nk")), c4) == 16);
    CHECK(eval_vertex_index(vertex(catalog("pi1")), c4) == 256);
    CHECK(eval_vertex_index(vertex(catalog("nk_star")), c4) == 256);
}

TEST_CASE("exact values agree with an independent rational sum")
{
    std::mt19937_64 rng(5);
    for (int k : {-4, -2, -1, 1, 2, 3}) {
        const VertexIndexSpec spec = m1_alpha_spec(k / 2.0);
        REQUIRE(spec.exact());
        for (int t = 0; t < 50; ++t) {
            const auto m = brute::random_matrix_min_degree(2 + static_cast<int>(rng() % 9), 0.5, 1, rng);
            brute::Fraction want;
            for (int d : brute::degrees(m))
                want = want + brute::int_power(d, k);
            const auto got = exact_value(spec, DegreeHistogram::of(from_matrix(m)));
            REQUIRE(got);
            CHECK(brute::Fraction(got->numerator, got->denominator).str() == want.str());
        }
    }
}

TEST_CASE("domain errors")
{
    const Graph with_isolated(3, {{0, 1}});
    CHECK_THROWS_AS(eval_vertex_index(m1_alpha_spec(1), with_isolated), domain_error);
    CHECK_THROWS_AS(eval_vertex_index(vertex(catalog("nk")), Graph(3, {{0, 1}, {1, 2}})), domain_error);
    CHECK_THROWS_AS(eval_edge_index(std::get<EdgeIndexSpec>(catalog("randic")), Graph(2)), domain_error);
    CHECK_THROWS_AS(parse_index("m1_alpha"), std::invalid_argument);
    CHECK_THROWS_AS(parse_index("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_index("randic:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_table("1:0.5,3:0.1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_table("1:-1"), std::invalid_argument);
}

TEST_CASE("tables and the log transform")
{
    const VertexIndexSpec t = parse_table("1:1,2:0.5,3:0.25");
    CHECK(t.max_defined_degree() == 3);
    CHECK(eval_vertex_index(t, star) == doctest::Approx(3.25));
    CHECK_THROWS_AS(eval_vertex_index(t, complete_graph(5)), domain_error);

    const VertexIndexSpec lg = vertex(catalog("nk")).log_transformed();
    CHECK_FALSE(lg.defined_at(1));
    CHECK(lg.at(3) == doctest::Approx(std::log(3.0)));
}

TEST_CASE("vertex to edge transform")
{
    std::mt19937_64 rng(9);
    const VertexIndexSpec spec = m1_alpha_spec(0.75);
    const EdgeIndexSpec edge = vertex_to_edge_transform(spec);
    for (int t = 0; t < 100; ++t) {
        const Graph g = from_matrix(brute::random_matrix_min_degree(2 + static_cast<int>(rng() % 12), 0.4, 1, rng));
        const double v = eval_vertex_index(spec, g);
        CHECK(std::fabs(eval_edge_index(edge, g) - v) <= 1e-12 * (1 + v));
    }
    CHECK_THROWS(vertex_to_edge_transform(vertex(catalog("nk"))));
}

TEST_CASE("monotonicity classification")
{
    CHECK(classify_monotonicity(m1_alpha_spec(1), 1, 6).cls == MonotonicityClass::strictly_increasing);
    CHECK(classify_monotonicity(m1_alpha_spec(-1), 1, 6).cls == MonotonicityClass::strictly_decreasing);
    CHECK(classify_monotonicity(m1_alpha_spec(0), 1, 6).cls == MonotonicityClass::constant);
    CHECK(classify_monotonicity(parse_table("1:1,2:1,3:2"), 1, 3).cls == MonotonicityClass::non_decreasing);
    CHECK(classify_monotonicity(parse_table("1:1,2:2,3:1"), 1, 3).cls == MonotonicityClass::mixed);
    CHECK(classify_monotonicity(m1_alpha_spec(0), 1, 6).non_increasing());
    CHECK_THROWS(classify_monotonicity(m1_alpha_spec(1), 0, 3));
}

TEST_CASE("histogram comparison is exact for rational rules")
{
    const VertexIndexSpec id = m1_alpha_spec(-0.5);
    const auto a = DegreeHistogram::of(std::vector<int>{1, 2, 2, 3});
    const auto b = DegreeHistogram::of(std::vector<int>{1, 3, 3, 3, 2});
    CHECK(compare_histograms(id, a, b, 0.0) < 0);  // 7/3 < 5/2
    CHECK(compare_histograms(id, a, a, 0.0) == 0);
    CHECK(display_name(IndexSpec{m1_alpha_spec(-0.5)}) == "m1_alpha:-0.5");
}
