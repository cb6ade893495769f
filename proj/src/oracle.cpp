#include "zagreb/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "zagreb/canonical.hpp"
#include "zagreb/errors.hpp"
#include "zagreb/graph_io.hpp"

namespace zagreb {

namespace {

constexpr double kTolerance = 1e-9;
constexpr int kMaxVerifyDelta = 6;

std::string to_decimal(int128 v)
{
    if (v == 0)
        return "0";
    const bool negative = v < 0;
    std::string digits;
    while (v != 0) {
        const int d = static_cast<int>(v % 10);
        digits.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
        v /= 10;
    }
    if (negative)
        digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

int128 gcd128(int128 a, int128 b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        const int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::optional<std::string> exact_text(const VertexIndexSpec & spec, const DegreeHistogram & hist)
{
    if (spec.mode() == IndexMode::multiplicative_vertex) {
        if (const auto p = exact_product(spec, hist))
            return std::to_string(*p);
        return std::nullopt;
    }
    const auto v = exact_value(spec, hist);
    if (!v)
        return std::nullopt;
    const int128 g = gcd128(v->numerator, v->denominator);
    const int128 num = g ? v->numerator / g : v->numerator;
    const int128 den = g ? v->denominator / g : v->denominator;
    return den == 1 ? to_decimal(num) : to_decimal(num) + "/" + to_decimal(den);
}

bool close(double a, double b) { return std::fabs(a - b) <= kTolerance * (1.0 + std::fabs(b)); }

std::string describe(double v)
{
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

std::string join(const std::vector<std::string> & items, const char * sep = ", ")
{
    std::string out;
    for (const auto & s : items) {
        if (!out.empty())
            out += sep;
        out += s;
    }
    return out;
}

void add(VerificationReport & r, std::string name, Verdict v, std::string detail = {})
{
    r.checks.push_back({std::move(name), v, std::move(detail)});
}

std::vector<std::string> memberships(const Graph & g, int delta, int Delta, bool strict)
{
    std::vector<std::string> out;
    for (const auto & id : families_at(delta, Delta))
        if (is_member(g, id, strict))
            out.push_back(to_string(id));
    return out;
}

void fill_oracle(VerificationReport & r, const VertexIndexSpec & spec, const MinimumResult & m, bool strict)
{
    const bool multiplicative = spec.mode() == IndexMode::multiplicative_vertex;
    r.oracle_empty = m.empty;
    r.per_order = m.per_order;
    if (multiplicative)
        for (auto & om : r.per_order)
            if (!om.empty)
                om.minimum = std::exp(om.minimum);
    if (m.empty)
        return;
    r.oracle_min = eval_vertex_index(spec, m.argmin_histograms.front());
    r.oracle_exact = exact_text(spec, m.argmin_histograms.front());
    for (const auto & form : m.argmins) {
        r.argmins.push_back(form.graph6);
        r.argmin_families.push_back(memberships(parse_graph6(form.graph6), r.delta, r.Delta, strict));
    }
    r.counts = {{"leaves_visited", m.leaves_visited},
                {"labeled_argmins", m.labeled_argmins},
                {"argmin_classes", m.argmins.size()}};
}

std::optional<MultiplicativeKind> multiplicative_kind(const VertexIndexSpec & spec)
{
    if (spec.name() == "pi1")
        return MultiplicativeKind::pi1;
    if (spec.name() == "nk")
        return MultiplicativeKind::nk;
    if (spec.name() == "nk_star")
        return MultiplicativeKind::nk_star;
    return std::nullopt;
}

std::set<std::string> canonical_classes(const std::vector<int> & degrees)
{
    ClassSpec cls;
    cls.n = static_cast<int>(degrees.size());
    cls.degree_sequence = degrees;
    cls.up_to_iso = true;
    std::set<std::string> out;
    enumerate_graphs(cls, [&](const Graph & g) { out.insert(to_graph6(g)); });
    return out;
}

void check_verify_budget(int Delta)
{
    if (Delta > kMaxVerifyDelta)
        throw budget_exceeded("verification is limited to Delta <= " + std::to_string(kMaxVerifyDelta),
                              estimated_cost(ClassSpec{Delta + 3, 1, Delta, false, true, {}}));
}

}  // namespace

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
    case Verdict::reported: return "reported";
    }
    return "?";
}

bool VerificationReport::passed() const
{
    return std::none_of(checks.begin(), checks.end(), [](const Check & c) { return c.verdict == Verdict::fail; });
}

std::vector<FamilyId> families_at(int delta, int Delta)
{
    std::vector<FamilyId> out;
    for (auto kind : {FamilyKind::G_family, FamilyKind::H, FamilyKind::K_even, FamilyKind::K1, FamilyKind::K2,
                      FamilyKind::L}) {
        const FamilyId id{kind, delta, Delta};
        try {
            validate(id);
        }
        catch (const std::invalid_argument &) {
            continue;
        }
        out.push_back(id);
    }
    return out;
}

VerificationReport verify_bound(const VertexIndexSpec & spec, int delta, int Delta, const VerifyOptions & options)
{
    VerificationReport r;
    r.claim = "bound";
    r.index = display_name(spec);
    r.alpha = spec.parameter();
    r.delta = delta;
    r.Delta = Delta;
    r.n_min = Delta + 1;
    r.n_max = options.n_max.value_or(Delta + 3);

    const bool multiplicative = spec.mode() == IndexMode::multiplicative_vertex;
    const VertexIndexSpec search = multiplicative ? spec.log_transformed() : spec;
    const BoundResult b = lower_bound(spec, delta, Delta);
    r.bound = b;
    r.bound_exact = exact_text(spec, b.witness);

    const MinimumResult m = min_index_over_class(search, delta, Delta, r.n_min, r.n_max, {options.workers});
    fill_oracle(r, spec, m, options.strict_extremal);

    if (m.empty) {
        add(r, "bound_equals_minimum", Verdict::fail, "no graph in the class");
        return r;
    }
    const bool equal = compare_histograms(search, m.argmin_histograms.front(), b.witness, kTolerance) == 0 &&
                       close(r.oracle_min, b.value);
    add(r, "bound_equals_minimum", equal ? Verdict::pass : Verdict::fail,
        "bound " + describe(b.value) + ", minimum " + describe(r.oracle_min));

    std::vector<std::string> off;
    for (const auto & id : b.predicted_extremal)
        if (compare_histograms(search, family_histogram(id), b.witness, kTolerance) != 0)
            off.push_back(to_string(id));
    add(r, "predicted_families_attain_bound", off.empty() ? Verdict::pass : Verdict::fail,
        off.empty() ? "" : "not attaining: " + join(off));

    const std::set<std::string> argmin_set(r.argmins.begin(), r.argmins.end());
    std::vector<std::string> found;
    for (const auto & id : b.predicted_extremal)
        if (family_order(id) <= r.n_max && argmin_set.count(canonical_form(build_family(id).graph).graph6))
            found.push_back(to_string(id));
    add(r, "predicted_representative_is_argmin", found.empty() ? Verdict::fail : Verdict::pass,
        found.empty() ? "no predicted representative among the argmins" : join(found));

    if (b.characterization) {
        std::vector<std::string> outside;
        for (const auto & g6 : r.argmins) {
            const Graph g = parse_graph6(g6);
            const bool inside = std::any_of(b.predicted_extremal.begin(), b.predicted_extremal.end(),
                                            [&](const FamilyId & id) { return is_member(g, id, options.strict_extremal); });
            if (!inside)
                outside.push_back(g6);
        }
        add(r, "argmins_in_predicted_families", outside.empty() ? Verdict::pass : Verdict::fail,
            outside.empty() ? "" : "outside: " + join(outside));
    }
    else {
        std::vector<std::string> failing;
        for (const auto & h : b.hypotheses_checked)
            if (!h.holds)
                failing.push_back(h.name);
        add(r, "argmins_in_predicted_families", Verdict::skipped, "hypotheses fail: " + join(failing));
    }

    if (multiplicative) {
        const auto kind = multiplicative_kind(spec);
        if (kind && delta >= 2 && delta < Delta) {
            const BoundResult closed = multiplicative_lower_bound(*kind, delta, Delta);
            add(r, "closed_form_agrees", close(closed.value, b.value) ? Verdict::pass : Verdict::fail,
                "closed form " + describe(closed.value));
        }
        else {
            add(r, "closed_form_agrees", Verdict::skipped, "closed form needs 2 <= delta < Delta");
        }
    }
    return r;
}

VerificationReport verify_uniqueness(UniquenessKind kind, int delta, int Delta, const VerifyOptions &)
{
    check_verify_budget(Delta);
    if (delta < 1 || delta >= Delta)
        throw std::invalid_argument("uniqueness needs 1 <= delta < Delta");

    VerificationReport r;
    r.claim = "uniqueness";
    r.delta = delta;
    r.Delta = Delta;

    std::vector<FamilyId> reps;
    if (kind == UniquenessKind::H)
        reps = {{FamilyKind::H, delta, Delta}};
    else if (delta % 2 == 0)
        reps = {{FamilyKind::K_even, delta, Delta}};
    else if (delta >= 3)
        reps = {{FamilyKind::K1, delta, Delta}, {FamilyKind::K2, delta, Delta}};
    else
        reps = {{FamilyKind::K1, delta, Delta}};
    r.index = kind == UniquenessKind::H ? "H" : "K";
    r.n_min = r.n_max = family_order(reps.front());

    const std::set<std::string> classes = canonical_classes(expected_degrees(reps.front()));
    r.classes.assign(classes.begin(), classes.end());
    const std::size_t count = classes.size();

    std::set<std::string> built;
    for (const auto & id : reps)
        built.insert(canonical_form(build_family(id).graph).graph6);

    if (kind == UniquenessKind::K && delta == 1) {
        add(r, "class_count", Verdict::reported,
            "measured " + std::to_string(count) + " classes; a count of two is claimed for odd delta");
        add(r, "representatives_found", std::includes(classes.begin(), classes.end(), built.begin(), built.end())
                                            ? Verdict::pass
                                            : Verdict::fail);
    }
    else {
        const std::size_t expected = reps.size();
        add(r, "class_count", count == expected ? Verdict::pass : Verdict::fail,
            "measured " + std::to_string(count) + ", expected " + std::to_string(expected));
        add(r, "classes_match_representatives", classes == built ? Verdict::pass : Verdict::fail);
    }

    ClassSpec labeled;
    labeled.n = r.n_min;
    labeled.degree_sequence = expected_degrees(reps.front());
    r.counts = {{"classes", count}, {"labeled_realizations", enumerate_graphs(labeled, [](const Graph &) {})}};
    return r;
}

VerificationReport verify_edge_bound(int delta, int Delta, const VerifyOptions & options)
{
    check_verify_budget(Delta);
    const VertexIndexSpec spec = edge_count_spec();
    const FamilyId g_id{FamilyKind::G_family, delta, Delta};
    validate(g_id);

    VerificationReport r;
    r.claim = "edge_bound";
    r.index = "edges";
    r.delta = delta;
    r.Delta = Delta;
    r.n_min = Delta + 1;
    r.n_max = options.n_max.value_or(Delta + 3);

    BoundResult b;
    b.value = edge_lower_bound(delta, Delta);
    b.case_label = Delta * (delta + 1) % 2 == 0 ? "edges:even" : "edges:odd";
    b.predicted_extremal = {g_id};
    b.characterization = true;
    b.witness = family_histogram(g_id);
    r.bound = b;
    r.bound_exact = exact_text(spec, b.witness);

    const MinimumResult m = min_index_over_class(spec, delta, Delta, r.n_min, r.n_max, {options.workers});
    fill_oracle(r, spec, m, options.strict_extremal);
    if (m.empty) {
        add(r, "bound_equals_minimum", Verdict::fail, "no graph in the class");
        return r;
    }
    const bool equal = compare_histograms(spec, m.argmin_histograms.front(), b.witness, kTolerance) == 0;
    add(r, "bound_equals_minimum", equal ? Verdict::pass : Verdict::fail,
        "bound " + describe(b.value) + ", minimum " + describe(r.oracle_min));

    const std::set<std::string> members = canonical_classes(expected_degrees(g_id));
    const std::set<std::string> argmins(r.argmins.begin(), r.argmins.end());
    add(r, "equality_exactly_on_family", members == argmins ? Verdict::pass : Verdict::fail,
        std::to_string(members.size()) + " member classes, " + std::to_string(argmins.size()) + " argmin classes");
    r.counts.emplace_back("member_classes", members.size());
    return r;
}

VerificationReport verify_window(const VertexIndexSpec & spec, int delta, int Delta, const VerifyOptions & options)
{
    if (delta < 1 || delta >= Delta)
        throw std::invalid_argument("window check needs 1 <= delta < Delta");
    const VertexWindow window = minimal_vertex_window(spec, delta, Delta);

    VerificationReport r;
    r.claim = "window";
    r.index = display_name(spec);
    r.alpha = spec.parameter();
    r.delta = delta;
    r.Delta = Delta;
    r.n_min = window.min_order;
    r.n_max = options.n_max.value_or(Delta + 4);

    const MinimumResult inner =
        min_index_over_class(spec, delta, Delta, window.min_order, window.max_order, {options.workers});
    const MinimumResult wide = min_index_over_class(spec, delta, Delta, window.min_order, r.n_max, {options.workers});
    fill_oracle(r, spec, wide, options.strict_extremal);
    if (inner.empty || wide.empty) {
        add(r, "window_sufficient", Verdict::fail, "no graph inside the window");
        return r;
    }
    const int cmp = compare_histograms(spec, wide.argmin_histograms.front(), inner.argmin_histograms.front(), kTolerance);
    add(r, "window_sufficient", cmp < 0 ? Verdict::fail : Verdict::pass,
        "window [" + std::to_string(window.min_order) + ", " + std::to_string(window.max_order) + "] minimum " +
            describe(eval_vertex_index(spec, inner.argmin_histograms.front())) + ", up to n = " +
            std::to_string(r.n_max) + " minimum " + describe(r.oracle_min));

    std::vector<std::string> outside;
    for (const auto & g6 : r.argmins) {
        const int n = parse_graph6(g6).order();
        if (n < window.min_order || n > window.max_order)
            outside.push_back(g6);
    }
    add(r, "argmin_orders_in_window", outside.empty() ? Verdict::pass : Verdict::fail,
        outside.empty() ? "" : "outside: " + join(outside));
    return r;
}

}  // namespace zagreb
