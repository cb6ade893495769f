#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

/// Largest degree a spec is tabulated for (a simple graph on at most
/// kMaxVertices vertices cannot exceed it).
inline constexpr int kMaxDegree = kMaxVertices - 1;

/// Number of vertices of each degree.
class DegreeHistogram {
public:
    DegreeHistogram() { counts_.fill(0); }

    static DegreeHistogram of(const Graph & g);
    static DegreeHistogram of(std::span<const int> degrees);

    DegreeHistogram & add(int degree, int count = 1);
    int count(int degree) const { return counts_.at(static_cast<std::size_t>(degree)); }
    int order() const;
    int min_degree() const;  // -1 when empty
    int max_degree() const;  // -1 when empty
    int degree_sum() const;
    std::vector<int> sorted_degrees() const;

    friend bool operator==(const DegreeHistogram &, const DegreeHistogram &) = default;
    friend auto operator<=>(const DegreeHistogram &, const DegreeHistogram &) = default;

private:
    std::array<int, kMaxDegree + 1> counts_;
};

enum class IndexMode { additive_vertex, multiplicative_vertex };

/// Rational form of a spec's values: value(d) = numerators[d] / denominator,
/// available for degrees 1..max_degree().
struct ExactWeights {
    std::int64_t denominator = 1;
    std::vector<std::int64_t> numerators;  // [0] unused

    int max_degree() const { return static_cast<int>(numerators.size()) - 1; }
};

__extension__ using int128 = __int128;
__extension__ using uint128 = unsigned __int128;

/// Exact value of an additive index, as numerator / denominator.
struct ExactValue {
    int128 numerator = 0;
    std::int64_t denominator = 1;

    friend bool operator==(const ExactValue &, const ExactValue &) = default;
};

/// A vertex-degree rule: additive J(G) = sum h(d_u), or multiplicative
/// J'(G) = prod h'(d_u). Values are tabulated by degree; degrees with no
/// value are outside the rule's domain.
class VertexIndexSpec {
public:
    VertexIndexSpec(std::string name, IndexMode mode, std::vector<std::optional<double>> values,
                    std::optional<double> parameter = std::nullopt,
                    std::optional<ExactWeights> exact = std::nullopt,
                    std::vector<std::optional<std::uint64_t>> integer_values = {});

    static VertexIndexSpec from_function(std::string name, IndexMode mode,
                                         const std::function<double(int)> & h,
                                         std::optional<double> parameter = std::nullopt);

    /// User table of degree -> value; must cover 1..max key, all values > 0.
    static VertexIndexSpec from_table(std::string name, const std::map<int, double> & table);

    const std::string & name() const noexcept { return name_; }
    IndexMode mode() const noexcept { return mode_; }
    std::optional<double> parameter() const noexcept { return parameter_; }
    const std::optional<ExactWeights> & exact() const noexcept { return exact_; }

    bool defined_at(int degree) const;
    /// Throws domain_error outside the domain.
    double at(int degree) const;
    /// Largest d such that the rule is defined on 1..d.
    int max_defined_degree() const;

    /// Exact integer value of h'(d) for integer-valued multiplicative rules.
    std::optional<std::uint64_t> integer_at(int degree) const;

    /// The additive rule log h'(d) of a multiplicative rule.
    VertexIndexSpec log_transformed() const;

private:
    std::string name_;
    IndexMode mode_;
    std::optional<double> parameter_;
    std::vector<std::optional<double>> values_;
    std::optional<ExactWeights> exact_;
    std::vector<std::optional<std::uint64_t>> integer_values_;
};

/// Edge rule I(G) = sum over edges of h(d_u, d_v), with h symmetric. A NaN
/// from `h` marks a degree pair outside the rule's domain.
class EdgeIndexSpec {
public:
    EdgeIndexSpec(std::string name, const std::function<double(int, int)> & h,
                  std::optional<double> parameter = std::nullopt);

    const std::string & name() const noexcept { return name_; }
    std::optional<double> parameter() const noexcept { return parameter_; }
    bool defined_at(int x, int y) const;
    double at(int x, int y) const;

private:
    std::string name_;
    std::optional<double> parameter_;
    std::vector<std::optional<double>> table_;  // (kMaxDegree+1)^2, row-major
};

using IndexSpec = std::variant<VertexIndexSpec, EdgeIndexSpec>;

/// Additive mode: sum of h(d). Multiplicative mode: the exact integer
/// product when the rule is integer valued and the product fits in 64 bits,
/// else exp(sum log h'(d)). Throws domain_error on isolated vertices or, in
/// multiplicative mode, on a factor <= 1.
double eval_vertex_index(const VertexIndexSpec & spec, const Graph & g);
double eval_vertex_index(const VertexIndexSpec & spec, const DegreeHistogram & hist);

/// sum log h'(d) for multiplicative rules.
double log_vertex_index(const VertexIndexSpec & spec, const Graph & g);
double log_vertex_index(const VertexIndexSpec & spec, const DegreeHistogram & hist);

std::optional<std::uint64_t> exact_product(const VertexIndexSpec & spec, const DegreeHistogram & hist);
std::optional<std::uint64_t> exact_product(const VertexIndexSpec & spec, const Graph & g);

/// Exact rational value of an additive rule on a histogram, when the rule
/// carries exact weights covering every occurring degree.
std::optional<ExactValue> exact_value(const VertexIndexSpec & spec, const DegreeHistogram & hist);

/// Sign of J(a) - J(b) for an additive rule: exact when both values are
/// exactly representable, otherwise equal when within
/// rel_tol * (1 + max(|J(a)|, |J(b)|)).
int compare_histograms(const VertexIndexSpec & spec, const DegreeHistogram & a, const DegreeHistogram & b,
                       double rel_tol);

/// Throws domain_error when E(G) is empty.
double eval_edge_index(const EdgeIndexSpec & spec, const Graph & g);

/// h(x, y) = h~(x)/x + h~(y)/y, so that the edge sum equals the vertex sum
/// on graphs without isolated vertices.
EdgeIndexSpec vertex_to_edge_transform(const VertexIndexSpec & spec);

/// Built-in indices: m1_alpha, m2_alpha, first_zagreb, second_zagreb,
/// inverse_ID, forgotten, randic, modified_zagreb, pi1, nk, nk_star.
IndexSpec catalog(std::string_view name, std::optional<double> parameter = std::nullopt);

/// "name" or "name:parameter", e.g. "m1_alpha:-0.5".
IndexSpec parse_index(std::string_view text);

/// "1:0.5,2:0.25,..." -> table spec named `name`.
VertexIndexSpec parse_table(std::string_view text, std::string name = "table");

/// h(x) = x^{2 alpha}: exact integer powers for non-negative integer 2 alpha,
/// reciprocal integer powers for negative integer 2 alpha, std::pow otherwise.
VertexIndexSpec m1_alpha_spec(double alpha);

/// Half the degree: J(G) = |E(G)|.
VertexIndexSpec edge_count_spec();

std::string display_name(const IndexSpec & spec);

enum class MonotonicityClass {
    constant,
    strictly_increasing,
    strictly_decreasing,
    non_decreasing,
    non_increasing,
    mixed,
};

std::string_view to_string(MonotonicityClass c);

struct MonotonicityReport {
    MonotonicityClass cls = MonotonicityClass::constant;
    int lo = 1;
    int hi = 1;
    std::vector<int> steps;  // sign of h(d+1) - h(d) for d = lo..hi-1

    bool non_decreasing() const;
    bool non_increasing() const;
};

/// Sign of h(a) - h(b), exact when the spec carries exact weights.
int compare_at(const VertexIndexSpec & spec, int a, int b);

MonotonicityReport classify_monotonicity(const VertexIndexSpec & spec, int lo, int hi);

}  // namespace zagreb
