#include "zagreb/index.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "zagreb/errors.hpp"

namespace zagreb {

namespace {

constexpr std::size_t kSlots = kMaxDegree + 1;

std::string format_parameter(double p)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", p);
    return buf;
}

// base^exp in int64, nullopt on overflow.
std::optional<std::int64_t> checked_pow(std::int64_t base, int exp)
{
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i)
        if (__builtin_mul_overflow(r, base, &r))
            return std::nullopt;
    return r;
}

double integer_power(int base, int exp)
{
    double r = 1.0;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

std::optional<ExactWeights> power_weights(int k)
{
    ExactWeights w;
    if (k >= 0) {
        w.numerators.push_back(0);
        for (int d = 1; d <= kMaxDegree; ++d) {
            const auto p = checked_pow(d, k);
            if (!p)
                break;
            w.numerators.push_back(*p);
        }
    }
    else {
        // Common denominator lcm(1..D)^|k| for the largest D that fits.
        std::int64_t l = 1, denom = 1;
        int top = 0;
        for (int d = 1; d <= kMaxDegree; ++d) {
            std::int64_t next = 0;
            if (__builtin_mul_overflow(l / std::gcd(l, std::int64_t{d}), std::int64_t{d}, &next))
                break;
            const auto p = checked_pow(next, -k);
            if (!p)
                break;
            l = next;
            denom = *p;
            top = d;
        }
        w.denominator = denom;
        w.numerators.push_back(0);
        for (int d = 1; d <= top; ++d)
            w.numerators.push_back(denom / *checked_pow(d, -k));
    }
    if (w.max_degree() < 1)
        return std::nullopt;
    return w;
}

std::optional<int> as_integer(double x)
{
    if (!std::isfinite(x) || std::floor(x) != x || std::fabs(x) > 64)
        return std::nullopt;
    return static_cast<int>(x);
}

double parse_double(std::string_view text, std::string_view what)
{
    // std::from_chars for double is available in libstdc++ 11.
    double value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("cannot parse " + std::string(what) + " \"" + std::string(text) + "\"");
    return value;
}

EdgeIndexSpec m2_alpha_spec(std::string name, double alpha)
{
    const auto k = as_integer(alpha);
    auto h = [alpha, k](int x, int y) {
        if (k && *k >= 0)
            return integer_power(x * y, *k);
        if (k)
            return 1.0 / integer_power(x * y, -*k);
        return std::pow(static_cast<double>(x * y), alpha);
    };
    return EdgeIndexSpec(std::move(name), h, alpha);
}

VertexIndexSpec multiplicative_power(std::string name, int exponent_kind)
{
    // exponent_kind: 2 -> x^2, 1 -> x, 0 -> x^x
    std::vector<std::optional<double>> values(kSlots);
    std::vector<std::optional<std::uint64_t>> ints(kSlots);
    for (int d = 1; d <= kMaxDegree; ++d) {
        const int e = exponent_kind == 0 ? d : exponent_kind;
        values[static_cast<std::size_t>(d)] = integer_power(d, e);
        if (const auto p = checked_pow(d, e))
            ints[static_cast<std::size_t>(d)] = static_cast<std::uint64_t>(*p);
    }
    return VertexIndexSpec(std::move(name), IndexMode::multiplicative_vertex, std::move(values), std::nullopt,
                           std::nullopt, std::move(ints));
}

VertexIndexSpec renamed(VertexIndexSpec spec, std::string name)
{
    std::vector<std::optional<double>> values(kSlots);
    std::vector<std::optional<std::uint64_t>> ints(kSlots);
    for (int d = 1; d <= kMaxDegree; ++d) {
        if (spec.defined_at(d))
            values[static_cast<std::size_t>(d)] = spec.at(d);
        ints[static_cast<std::size_t>(d)] = spec.integer_at(d);
    }
    return VertexIndexSpec(std::move(name), spec.mode(), std::move(values), spec.parameter(), spec.exact(),
                           std::move(ints));
}

}  // namespace

// ---------------------------------------------------------------- histogram

DegreeHistogram DegreeHistogram::of(const Graph & g)
{
    DegreeHistogram h;
    for (int v = 0; v < g.order(); ++v)
        h.add(g.degree(v));
    return h;
}

DegreeHistogram DegreeHistogram::of(std::span<const int> degrees)
{
    DegreeHistogram h;
    for (int d : degrees)
        h.add(d);
    return h;
}

DegreeHistogram & DegreeHistogram::add(int degree, int count)
{
    if (degree < 0 || degree > kMaxDegree)
        throw std::out_of_range("degree out of range");
    counts_[static_cast<std::size_t>(degree)] += count;
    return *this;
}

int DegreeHistogram::order() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

int DegreeHistogram::min_degree() const
{
    for (int d = 0; d <= kMaxDegree; ++d)
        if (counts_[static_cast<std::size_t>(d)] > 0)
            return d;
    return -1;
}

int DegreeHistogram::max_degree() const
{
    for (int d = kMaxDegree; d >= 0; --d)
        if (counts_[static_cast<std::size_t>(d)] > 0)
            return d;
    return -1;
}

int DegreeHistogram::degree_sum() const
{
    int s = 0;
    for (int d = 0; d <= kMaxDegree; ++d)
        s += d * counts_[static_cast<std::size_t>(d)];
    return s;
}

std::vector<int> DegreeHistogram::sorted_degrees() const
{
    std::vector<int> out;
    for (int d = 0; d <= kMaxDegree; ++d)
        out.insert(out.end(), static_cast<std::size_t>(counts_[static_cast<std::size_t>(d)]), d);
    return out;
}

// ---------------------------------------------------------------- vertex spec

VertexIndexSpec::VertexIndexSpec(std::string name, IndexMode mode, std::vector<std::optional<double>> values,
                                 std::optional<double> parameter, std::optional<ExactWeights> exact,
                                 std::vector<std::optional<std::uint64_t>> integer_values)
    : name_(std::move(name)), mode_(mode), parameter_(parameter), values_(std::move(values)),
      exact_(std::move(exact)), integer_values_(std::move(integer_values))
{
    if (values_.size() > kSlots)
        throw std::invalid_argument("index table larger than the maximum degree");
    values_.resize(kSlots);
    integer_values_.resize(kSlots);
    values_[0].reset();
    for (int d = 1; d <= kMaxDegree; ++d) {
        const auto & v = values_[static_cast<std::size_t>(d)];
        if (v && !(std::isfinite(*v) && *v > 0))
            throw std::invalid_argument("index " + name_ + ": value at degree " + std::to_string(d) +
                                        " must be positive and finite");
    }
    if (exact_ && exact_->denominator <= 0)
        throw std::invalid_argument("exact weights need a positive denominator");
}

VertexIndexSpec VertexIndexSpec::from_function(std::string name, IndexMode mode,
                                               const std::function<double(int)> & h,
                                               std::optional<double> parameter)
{
    std::vector<std::optional<double>> values(kSlots);
    for (int d = 1; d <= kMaxDegree; ++d)
        values[static_cast<std::size_t>(d)] = h(d);
    return VertexIndexSpec(std::move(name), mode, std::move(values), parameter);
}

VertexIndexSpec VertexIndexSpec::from_table(std::string name, const std::map<int, double> & table)
{
    if (table.empty())
        throw std::invalid_argument("empty index table");
    std::vector<std::optional<double>> values(kSlots);
    int expected = 1;
    for (const auto & [d, v] : table) {
        if (d != expected)
            throw std::invalid_argument("index table must cover degrees 1.." + std::to_string(table.rbegin()->first) +
                                        " without gaps; missing degree " + std::to_string(expected));
        if (d > kMaxDegree)
            throw std::invalid_argument("index table degree above " + std::to_string(kMaxDegree));
        if (!(v > 0) || !std::isfinite(v))
            throw std::invalid_argument("index table value at degree " + std::to_string(d) + " must be > 0");
        values[static_cast<std::size_t>(d)] = v;
        ++expected;
    }
    return VertexIndexSpec(std::move(name), IndexMode::additive_vertex, std::move(values));
}

bool VertexIndexSpec::defined_at(int degree) const
{
    return degree >= 1 && degree <= kMaxDegree && values_[static_cast<std::size_t>(degree)].has_value();
}

double VertexIndexSpec::at(int degree) const
{
    if (degree == 0)
        throw domain_error("index " + name_ + " is undefined at degree 0 (isolated vertex)");
    if (!defined_at(degree))
        throw domain_error("index " + name_ + " is undefined at degree " + std::to_string(degree));
    return *values_[static_cast<std::size_t>(degree)];
}

int VertexIndexSpec::max_defined_degree() const
{
    int d = 0;
    while (d < kMaxDegree && defined_at(d + 1))
        ++d;
    return d;
}

std::optional<std::uint64_t> VertexIndexSpec::integer_at(int degree) const
{
    if (degree < 1 || degree > kMaxDegree)
        return std::nullopt;
    return integer_values_[static_cast<std::size_t>(degree)];
}

VertexIndexSpec VertexIndexSpec::log_transformed() const
{
    if (mode_ != IndexMode::multiplicative_vertex)
        throw std::invalid_argument("log transform applies to multiplicative indices only");
    std::vector<std::optional<double>> values(kSlots);
    for (int d = 1; d <= kMaxDegree; ++d)
        if (defined_at(d) && at(d) > 1.0)
            values[static_cast<std::size_t>(d)] = std::log(at(d));
    return VertexIndexSpec("log(" + name_ + ")", IndexMode::additive_vertex, std::move(values), parameter_);
}

// ---------------------------------------------------------------- edge spec

EdgeIndexSpec::EdgeIndexSpec(std::string name, const std::function<double(int, int)> & h,
                             std::optional<double> parameter)
    : name_(std::move(name)), parameter_(parameter), table_(kSlots * kSlots)
{
    for (int x = 1; x <= kMaxDegree; ++x)
        for (int y = x; y <= kMaxDegree; ++y) {
            const double v = h(x, y);
            if (std::isnan(v))
                continue;  // outside the rule's domain
            if (!(v > 0) || !std::isfinite(v))
                throw std::invalid_argument("edge index " + name_ + " must be positive");
            table_[static_cast<std::size_t>(x) * kSlots + static_cast<std::size_t>(y)] = v;
            table_[static_cast<std::size_t>(y) * kSlots + static_cast<std::size_t>(x)] = v;
        }
}

bool EdgeIndexSpec::defined_at(int x, int y) const
{
    return x >= 1 && y >= 1 && x <= kMaxDegree && y <= kMaxDegree &&
           table_[static_cast<std::size_t>(x) * kSlots + static_cast<std::size_t>(y)].has_value();
}

double EdgeIndexSpec::at(int x, int y) const
{
    if (!defined_at(x, y))
        throw domain_error("edge index " + name_ + " undefined at (" + std::to_string(x) + "," +
                           std::to_string(y) + ")");
    return *table_[static_cast<std::size_t>(x) * kSlots + static_cast<std::size_t>(y)];
}

// ---------------------------------------------------------------- evaluation

namespace {

void require_no_isolated(const DegreeHistogram & hist)
{
    if (hist.count(0) > 0)
        throw domain_error("graph has an isolated vertex; vertex indices are defined on degrees >= 1");
}

void require_multiplicative_domain(const VertexIndexSpec & spec, const DegreeHistogram & hist)
{
    for (int d = 1; d <= kMaxDegree; ++d)
        if (hist.count(d) > 0 && !(spec.at(d) > 1.0))
            throw domain_error("multiplicative index " + spec.name() + " needs factors > 1, but h'(" +
                               std::to_string(d) + ") <= 1");
}

}  // namespace

double eval_vertex_index(const VertexIndexSpec & spec, const DegreeHistogram & hist)
{
    require_no_isolated(hist);
    if (spec.mode() == IndexMode::multiplicative_vertex) {
        require_multiplicative_domain(spec, hist);
        if (const auto p = exact_product(spec, hist))
            return static_cast<double>(*p);
        return std::exp(log_vertex_index(spec, hist));
    }
    double sum = 0.0;
    for (int d = 1; d <= kMaxDegree; ++d)
        if (const int c = hist.count(d))
            sum += c * spec.at(d);
    return sum;
}

double eval_vertex_index(const VertexIndexSpec & spec, const Graph & g)
{
    return eval_vertex_index(spec, DegreeHistogram::of(g));
}

double log_vertex_index(const VertexIndexSpec & spec, const DegreeHistogram & hist)
{
    if (spec.mode() != IndexMode::multiplicative_vertex)
        throw std::invalid_argument("log value applies to multiplicative indices only");
    require_no_isolated(hist);
    require_multiplicative_domain(spec, hist);
    double sum = 0.0;
    for (int d = 1; d <= kMaxDegree; ++d)
        if (const int c = hist.count(d))
            sum += c * std::log(spec.at(d));
    return sum;
}

double log_vertex_index(const VertexIndexSpec & spec, const Graph & g)
{
    return log_vertex_index(spec, DegreeHistogram::of(g));
}

std::optional<std::uint64_t> exact_product(const VertexIndexSpec & spec, const DegreeHistogram & hist)
{
    if (spec.mode() != IndexMode::multiplicative_vertex || hist.count(0) > 0)
        return std::nullopt;
    std::uint64_t p = 1;
    for (int d = 1; d <= kMaxDegree; ++d) {
        const int c = hist.count(d);
        if (c == 0)
            continue;
        const auto f = spec.integer_at(d);
        if (!f)
            return std::nullopt;
        for (int i = 0; i < c; ++i)
            if (__builtin_mul_overflow(p, *f, &p))
                return std::nullopt;
    }
    return p;
}

std::optional<std::uint64_t> exact_product(const VertexIndexSpec & spec, const Graph & g)
{
    return exact_product(spec, DegreeHistogram::of(g));
}

std::optional<ExactValue> exact_value(const VertexIndexSpec & spec, const DegreeHistogram & hist)
{
    if (spec.mode() != IndexMode::additive_vertex || !spec.exact())
        return std::nullopt;
    const auto & w = *spec.exact();
    ExactValue v{0, w.denominator};
    for (int d = 0; d <= kMaxDegree; ++d) {
        const int c = hist.count(d);
        if (c == 0)
            continue;
        if (d < 1 || d > w.max_degree())
            return std::nullopt;
        v.numerator += static_cast<int128>(c) * w.numerators[static_cast<std::size_t>(d)];
    }
    return v;
}

int compare_histograms(const VertexIndexSpec & spec, const DegreeHistogram & a, const DegreeHistogram & b,
                       double rel_tol)
{
    const auto ea = exact_value(spec, a), eb = exact_value(spec, b);
    if (ea && eb)
        return ea->numerator < eb->numerator ? -1 : (ea->numerator > eb->numerator ? 1 : 0);
    const double va = eval_vertex_index(spec, a), vb = eval_vertex_index(spec, b);
    if (std::fabs(va - vb) <= rel_tol * (1.0 + std::max(std::fabs(va), std::fabs(vb))))
        return 0;
    return va < vb ? -1 : 1;
}

double eval_edge_index(const EdgeIndexSpec & spec, const Graph & g)
{
    if (g.size() == 0)
        throw domain_error("edge index " + spec.name() + " needs a non-trivial graph (E(G) non-empty)");
    double sum = 0.0;
    for (const auto & e : g.edges())
        sum += spec.at(g.degree(e.u), g.degree(e.v));
    return sum;
}

EdgeIndexSpec vertex_to_edge_transform(const VertexIndexSpec & spec)
{
    if (spec.mode() != IndexMode::additive_vertex)
        throw std::invalid_argument("vertex-to-edge transform is unsupported for multiplicative indices");
    const int top = spec.max_defined_degree();
    std::vector<double> per_degree(kSlots, 0.0);
    for (int d = 1; d <= top; ++d)
        per_degree[static_cast<std::size_t>(d)] = spec.at(d) / d;
    auto h = [per_degree, top](int x, int y) {
        if (x > top || y > top)
            return std::numeric_limits<double>::quiet_NaN();
        return per_degree[static_cast<std::size_t>(x)] + per_degree[static_cast<std::size_t>(y)];
    };
    return EdgeIndexSpec("edge_form(" + spec.name() + ")", h, spec.parameter());
}

// ---------------------------------------------------------------- catalog

VertexIndexSpec m1_alpha_spec(double alpha)
{
    const double twice = 2.0 * alpha;
    if (const auto k = as_integer(twice)) {
        std::vector<std::optional<double>> values(kSlots);
        for (int d = 1; d <= kMaxDegree; ++d)
            values[static_cast<std::size_t>(d)] = *k >= 0 ? integer_power(d, *k) : 1.0 / integer_power(d, -*k);
        return VertexIndexSpec("m1_alpha", IndexMode::additive_vertex, std::move(values), alpha, power_weights(*k));
    }
    return VertexIndexSpec::from_function(
        "m1_alpha", IndexMode::additive_vertex, [twice](int d) { return std::pow(static_cast<double>(d), twice); },
        alpha);
}

VertexIndexSpec edge_count_spec()
{
    std::vector<std::optional<double>> values(kSlots);
    ExactWeights w{2, {0}};
    for (int d = 1; d <= kMaxDegree; ++d) {
        values[static_cast<std::size_t>(d)] = d / 2.0;
        w.numerators.push_back(d);
    }
    return VertexIndexSpec("edge_count", IndexMode::additive_vertex, std::move(values), std::nullopt, w);
}

IndexSpec catalog(std::string_view name, std::optional<double> parameter)
{
    auto fixed = [&](double value) {
        if (parameter && *parameter != value)
            throw std::invalid_argument(std::string(name) + " has a fixed parameter " + format_parameter(value));
        return value;
    };
    if (name == "m1_alpha") {
        if (!parameter)
            throw std::invalid_argument("m1_alpha requires alpha, e.g. m1_alpha:-0.5");
        return m1_alpha_spec(*parameter);
    }
    if (name == "m2_alpha") {
        if (!parameter)
            throw std::invalid_argument("m2_alpha requires alpha, e.g. m2_alpha:-1");
        return m2_alpha_spec("m2_alpha", *parameter);
    }
    if (name == "first_zagreb")
        return renamed(m1_alpha_spec(fixed(1.0)), "first_zagreb");
    if (name == "inverse_ID")
        return renamed(m1_alpha_spec(fixed(-0.5)), "inverse_ID");
    if (name == "forgotten")
        return renamed(m1_alpha_spec(fixed(1.5)), "forgotten");
    if (name == "second_zagreb")
        return m2_alpha_spec("second_zagreb", fixed(1.0));
    if (name == "randic")
        return m2_alpha_spec("randic", fixed(-0.5));
    if (name == "modified_zagreb")
        return m2_alpha_spec("modified_zagreb", fixed(-1.0));
    if (parameter)
        throw std::invalid_argument(std::string(name) + " takes no parameter");
    if (name == "pi1")
        return multiplicative_power("pi1", 2);
    if (name == "nk")
        return multiplicative_power("nk", 1);
    if (name == "nk_star")
        return multiplicative_power("nk_star", 0);
    throw std::invalid_argument("unknown index \"" + std::string(name) + "\"");
}

IndexSpec parse_index(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        return catalog(text);
    return catalog(text.substr(0, colon), parse_double(text.substr(colon + 1), "index parameter"));
}

VertexIndexSpec parse_table(std::string_view text, std::string name)
{
    std::map<int, double> table;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("table entry \"" + std::string(item) + "\" is not degree:value");
        int degree = 0;
        const auto key = item.substr(0, colon);
        const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), degree);
        if (ec != std::errc{} || ptr != key.data() + key.size())
            throw std::invalid_argument("bad table degree \"" + std::string(key) + "\"");
        if (!table.emplace(degree, parse_double(item.substr(colon + 1), "table value")).second)
            throw std::invalid_argument("duplicate table degree " + std::to_string(degree));
    }
    return VertexIndexSpec::from_table(std::move(name), table);
}

std::string display_name(const IndexSpec & spec)
{
    return std::visit(
        [](const auto & s) {
            if ((s.name() == "m1_alpha" || s.name() == "m2_alpha") && s.parameter())
                return s.name() + ":" + format_parameter(*s.parameter());
            return s.name();
        },
        spec);
}

// ---------------------------------------------------------------- monotonicity

std::string_view to_string(MonotonicityClass c)
{
    switch (c) {
    case MonotonicityClass::constant: return "constant";
    case MonotonicityClass::strictly_increasing: return "strictly-increasing";
    case MonotonicityClass::strictly_decreasing: return "strictly-decreasing";
    case MonotonicityClass::non_decreasing: return "non-decreasing";
    case MonotonicityClass::non_increasing: return "non-increasing";
    case MonotonicityClass::mixed: return "mixed";
    }
    return "mixed";
}

bool MonotonicityReport::non_decreasing() const
{
    return cls == MonotonicityClass::constant || cls == MonotonicityClass::strictly_increasing ||
           cls == MonotonicityClass::non_decreasing;
}

bool MonotonicityReport::non_increasing() const
{
    return cls == MonotonicityClass::constant || cls == MonotonicityClass::strictly_decreasing ||
           cls == MonotonicityClass::non_increasing;
}

int compare_at(const VertexIndexSpec & spec, int a, int b)
{
    if (const auto & w = spec.exact(); w && a >= 1 && b >= 1 && a <= w->max_degree() && b <= w->max_degree()) {
        const auto x = w->numerators[static_cast<std::size_t>(a)], y = w->numerators[static_cast<std::size_t>(b)];
        return x < y ? -1 : (x > y ? 1 : 0);
    }
    const double x = spec.at(a), y = spec.at(b);
    return x < y ? -1 : (x > y ? 1 : 0);
}

MonotonicityReport classify_monotonicity(const VertexIndexSpec & spec, int lo, int hi)
{
    if (lo < 1 || lo > hi)
        throw std::invalid_argument("classify_monotonicity needs 1 <= lo <= hi");
    MonotonicityReport r;
    r.lo = lo;
    r.hi = hi;
    bool up = false, down = false, flat = false;
    for (int d = lo; d < hi; ++d) {
        const int s = compare_at(spec, d + 1, d);
        r.steps.push_back(s);
        (s > 0 ? up : s < 0 ? down : flat) = true;
    }
    if (up && down)
        r.cls = MonotonicityClass::mixed;
    else if (up)
        r.cls = flat ? MonotonicityClass::non_decreasing : MonotonicityClass::strictly_increasing;
    else if (down)
        r.cls = flat ? MonotonicityClass::non_increasing : MonotonicityClass::strictly_decreasing;
    else
        r.cls = MonotonicityClass::constant;
    return r;
}

}  // namespace zagreb
