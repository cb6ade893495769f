#include "zagreb/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "zagreb/errors.hpp"

namespace zagreb {

namespace {

constexpr double kTieTolerance = 1e-12;

bool odd(int x) { return x % 2 != 0; }

void check_degrees(int delta, int Delta)
{
    if (delta < 1 || delta > Delta)
        throw std::invalid_argument("bounds need 1 <= delta <= Delta, got (" + std::to_string(delta) + ", " +
                                    std::to_string(Delta) + ")");
    if (Delta + 3 > kMaxVertices)
        throw std::invalid_argument("Delta too large");
}

void require_additive(const VertexIndexSpec & spec)
{
    if (spec.mode() != IndexMode::additive_vertex)
        throw std::invalid_argument("this bound takes an additive rule; use lower_bound() or "
                                    "multiplicative_lower_bound() for " + spec.name());
}

std::string deg(const char * symbol, int offset)
{
    std::string s = symbol;
    if (offset > 0)
        s += "+" + std::to_string(offset);
    else if (offset < 0)
        s += std::to_string(offset);
    return s;
}

// h(a) > h(b) (or < for `increasing`), recorded with symbolic names. Degrees
// below `floor` cannot occur in the class, so the comparison is vacuous.
Hypothesis strict(const VertexIndexSpec & spec, const char * sa, int oa, int a, const char * sb, int ob, int b,
                  bool increasing, int floor, int ceiling)
{
    const std::string name =
        "h(" + deg(sa, oa) + ")" + (increasing ? " < " : " > ") + "h(" + deg(sb, ob) + ")";
    if (a < floor || b < floor || a > ceiling || b > ceiling)
        return {name + " [vacuous]", true};
    const int c = compare_at(spec, a, b);
    return {name, increasing ? c < 0 : c > 0};
}

bool all_hold(const std::vector<Hypothesis> & hs)
{
    for (const auto & h : hs)
        if (!h.holds)
            return false;
    return true;
}

std::vector<FamilyId> odd_k_families(int delta, int Delta)
{
    std::vector<FamilyId> out{{FamilyKind::K1, delta, Delta}};
    if (delta >= 3)
        out.push_back({FamilyKind::K2, delta, Delta});
    return out;
}

BoundResult regular_bound(const VertexIndexSpec & spec, int Delta, const char * label)
{
    BoundResult r;
    r.value = (Delta + 1) * spec.at(Delta);
    r.case_label = label;
    r.predicted_extremal = {{FamilyKind::G_family, Delta, Delta}};
    r.hypotheses_checked = {{"delta == Delta: only K_{Delta+1} is minimal", true}};
    r.characterization = true;
    r.witness = family_histogram(r.predicted_extremal.front());
    return r;
}

// checked product in unsigned 128-bit; nullopt on overflow
using Factors = std::vector<std::pair<unsigned, unsigned>>;

std::optional<uint128> power_product(const Factors & factors)
{
    uint128 p = 1;
    for (const auto & [base, exp] : factors)
        for (unsigned i = 0; i < exp; ++i)
            if (__builtin_mul_overflow(p, static_cast<uint128>(base), &p))
                return std::nullopt;
    return p;
}

long double power_product_float(const Factors & factors)
{
    long double p = 1.0L;
    for (const auto & [base, exp] : factors)
        p *= std::pow(static_cast<long double>(base), static_cast<long double>(exp));
    return p;
}

}  // namespace

int edge_lower_bound(int delta, int Delta)
{
    check_degrees(delta, Delta);
    const int twice = Delta * (delta + 1);
    return odd(twice) ? (twice + 1) / 2 : twice / 2;
}

BoundResult lower_bound_nondecreasing(const VertexIndexSpec & spec, int delta, int Delta)
{
    check_degrees(delta, Delta);
    require_additive(spec);
    const auto mono = classify_monotonicity(spec, delta, Delta);
    if (!mono.non_decreasing())
        throw hypothesis_error("h is " + std::string(to_string(mono.cls)) + " on [" + std::to_string(delta) + ", " +
                               std::to_string(Delta) + "], not non-decreasing");

    if (delta == Delta)
        return regular_bound(spec, Delta, "nondecreasing:regular");

    const FamilyId g{FamilyKind::G_family, delta, Delta};
    auto h = [&](int x) { return spec.at(x); };
    BoundResult r;
    r.predicted_extremal = {g};
    r.witness = family_histogram(g);
    if (!odd(Delta * (delta + 1))) {
        r.value = Delta * h(delta) + h(Delta);
        r.case_label = "nondecreasing:even";
        r.hypotheses_checked = {strict(spec, "delta", 0, delta, "delta", 1, delta + 1, true, delta, Delta)};
    }
    else {
        r.value = (Delta - 1) * h(delta) + h(delta + 1) + h(Delta);
        r.case_label = "nondecreasing:odd";
        r.hypotheses_checked = {strict(spec, "delta", 0, delta, "delta", 1, delta + 1, true, delta, Delta),
                                strict(spec, "delta", 1, delta + 1, "delta", 2, delta + 2, true, delta, Delta)};
    }
    r.characterization = all_hold(r.hypotheses_checked);
    return r;
}

BoundResult lower_bound_nonincreasing(const VertexIndexSpec & spec, int delta, int Delta)
{
    check_degrees(delta, Delta);
    require_additive(spec);
    const auto mono = classify_monotonicity(spec, delta, Delta);
    if (!mono.non_increasing())
        throw hypothesis_error("h is " + std::string(to_string(mono.cls)) + " on [" + std::to_string(delta) + ", " +
                               std::to_string(Delta) + "], not non-increasing");
    if (delta == Delta)
        return regular_bound(spec, Delta, "nonincreasing:regular");

    auto h = [&](int x) { return spec.at(x); };
    const auto h_drop = strict(spec, "Delta", -1, Delta - 1, "Delta", 0, Delta, false, delta, Delta);
    const auto h_drop2 = strict(spec, "Delta", -2, Delta - 2, "Delta", -1, Delta - 1, false, delta, Delta);

    struct Branch {
        std::string tag;
        double value;
        DegreeHistogram witness;
        std::vector<FamilyId> families;
        std::vector<Hypothesis> hypotheses;
    };

    const FamilyId hid{FamilyKind::H, delta, Delta};
    Branch first{"H", delta * h(Delta) + (Delta - delta) * h(Delta - 1) + h(delta), family_histogram(hid), {hid},
                 {h_drop2, h_drop}};

    std::string parity;
    Branch second;
    std::vector<Branch> tied_extra;
    if (!odd(delta)) {
        parity = "delta_even";
        const FamilyId k{FamilyKind::K_even, delta, Delta};
        second = {"K", (Delta + 1) * h(Delta) + h(delta), family_histogram(k), {k}, {h_drop}};
    }
    else {
        const FamilyId k1{FamilyKind::K1, delta, Delta};
        Branch k_odd{"K", Delta * h(Delta) + h(Delta - 1) + h(delta), family_histogram(k1),
                     odd_k_families(delta, Delta), {h_drop2, h_drop}};
        if (!odd(Delta)) {
            parity = "delta_odd_Delta_even";
            second = k_odd;
        }
        else {
            DegreeHistogram twice_top, below_top;
            twice_top.add(Delta, 2);
            below_top.add(Delta - 1, 1);
            const int threshold = compare_histograms(spec, twice_top, below_top, kTieTolerance);
            if (threshold > 0) {
                parity = "odd_odd_above_threshold";
                second = k_odd;
            }
            else {
                parity = "odd_odd_at_or_below_threshold";
                const FamilyId l{FamilyKind::L, delta, Delta};
                second = {"L", (Delta + 2) * h(Delta) + h(delta), family_histogram(l), {l}, {h_drop}};
                if (threshold == 0)
                    tied_extra.push_back(k_odd);  // K and L coincide when 2h(Delta) = h(Delta-1)
            }
        }
        if (delta == Delta - 1 && second.tag == "K")
            second.hypotheses.push_back({"delta odd and delta = Delta-1: characterization reported, not asserted",
                                         false});
    }

    const int cmp = compare_histograms(spec, first.witness, second.witness, kTieTolerance);
    std::vector<const Branch *> winners;
    if (cmp <= 0)
        winners.push_back(&first);
    if (cmp >= 0) {
        winners.push_back(&second);
        for (const auto & b : tied_extra)
            winners.push_back(&b);
    }

    BoundResult r;
    r.case_label = "nonincreasing:" + parity + ":";
    r.value = winners.front()->value;
    r.witness = winners.front()->witness;
    for (std::size_t i = 0; i < winners.size(); ++i) {
        const auto * w = winners[i];
        if (w->value < r.value) {
            r.value = w->value;
            r.witness = w->witness;
        }
        r.case_label += (i ? "+" : "") + w->tag;
        r.predicted_extremal.insert(r.predicted_extremal.end(), w->families.begin(), w->families.end());
        r.hypotheses_checked.insert(r.hypotheses_checked.end(), w->hypotheses.begin(), w->hypotheses.end());
    }
    r.characterization = all_hold(r.hypotheses_checked);
    return r;
}

BoundResult lower_bound(const VertexIndexSpec & spec, int delta, int Delta)
{
    if (spec.mode() == IndexMode::multiplicative_vertex) {
        check_degrees(delta, Delta);
        for (int d = delta; d <= Delta; ++d)
            if (!(spec.at(d) > 1.0))
                throw domain_error("multiplicative index " + spec.name() + " needs h'(d) > 1 on [delta, Delta]");
        auto r = lower_bound(spec.log_transformed(), delta, Delta);
        const auto exact = exact_product(spec, r.witness);
        r.value = exact ? static_cast<double>(*exact) : std::exp(r.value);
        return r;
    }
    check_degrees(delta, Delta);
    if (classify_monotonicity(spec, delta, Delta).non_decreasing())
        return lower_bound_nondecreasing(spec, delta, Delta);
    return lower_bound_nonincreasing(spec, delta, Delta);
}

BoundResult m1_alpha_lower_bound(double alpha, int delta, int Delta)
{
    check_degrees(delta, Delta);
    const auto spec = m1_alpha_spec(alpha);
    if (alpha >= 0)
        return lower_bound_nondecreasing(spec, delta, Delta);
    return lower_bound_nonincreasing(spec, delta, Delta);
}

BoundResult multiplicative_lower_bound(MultiplicativeKind kind, int delta, int Delta)
{
    check_degrees(delta, Delta);
    if (delta < 2)
        throw domain_error("multiplicative bounds need delta >= 2: the factors must lie in (1, inf), and h'(1) = 1");
    if (delta == Delta)
        throw std::invalid_argument("multiplicative closed forms need delta < Delta");

    const unsigned d = static_cast<unsigned>(delta), D = static_cast<unsigned>(Delta);
    const bool even = !odd(Delta * (delta + 1));
    Factors factors;
    const char * name = "";
    switch (kind) {
    case MultiplicativeKind::pi1:
        name = "pi1";
        factors = even ? Factors{{d, 2 * D}, {D, 2}}
                       : Factors{{d, 2 * (D - 1)}, {d + 1, 2}, {D, 2}};
        break;
    case MultiplicativeKind::nk:
        name = "nk";
        factors = even ? Factors{{d, D}, {D, 1}}
                       : Factors{{d, D - 1}, {d + 1, 1}, {D, 1}};
        break;
    case MultiplicativeKind::nk_star:
        name = "nk_star";
        factors = even ? Factors{{d, d * D}, {D, D}}
                       : Factors{
                             {d, d * (D - 1)}, {d + 1, d + 1}, {D, D}};
        break;
    }

    const auto spec = std::get<VertexIndexSpec>(catalog(name));
    auto r = lower_bound_nondecreasing(spec.log_transformed(), delta, Delta);
    const double via_log = std::exp(r.value);
    const auto exact = power_product(factors);
    r.value = exact ? static_cast<double>(*exact) : static_cast<double>(power_product_float(factors));
    if (std::fabs(r.value - via_log) > 1e-9 * std::fabs(r.value))
        throw std::logic_error("multiplicative closed form disagrees with the log-domain bound for " +
                               std::string(name));
    r.case_label = even ? "multiplicative:even" : "multiplicative:odd";
    return r;
}

VertexWindow minimal_vertex_window(const VertexIndexSpec & spec, int delta, int Delta)
{
    check_degrees(delta, Delta);
    if (spec.mode() == IndexMode::multiplicative_vertex)
        return minimal_vertex_window(spec.log_transformed(), delta, Delta);
    const auto mono = classify_monotonicity(spec, delta, Delta);
    if (delta == Delta || mono.non_decreasing())
        return {Delta + 1, Delta + 1};
    if (!mono.non_increasing())
        throw hypothesis_error("h is " + std::string(to_string(mono.cls)) + " on [delta, Delta]; no window applies");
    if (!odd(delta * Delta))
        return {Delta + 1, Delta + 2};
    DegreeHistogram twice_top, below_top;
    twice_top.add(Delta, 2);
    below_top.add(Delta - 1, 1);
    if (compare_histograms(spec, twice_top, below_top, kTieTolerance) > 0)
        return {Delta + 1, Delta + 2};
    return {Delta + 1, Delta + 3};
}

}  // namespace zagreb
