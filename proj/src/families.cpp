#include "zagreb/families.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "zagreb/canonical.hpp"

namespace zagreb {

namespace {

[[noreturn]] void reject(const FamilyId & id, const std::string & why)
{
    throw std::invalid_argument("invalid family " + to_string(id) + ": " + why);
}

bool odd(int x) { return x % 2 != 0; }

GraphBuilder complete_builder(int k)
{
    GraphBuilder b(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            b.add_edge(u, v);
    return b;
}

FamilyGraph finish(const FamilyId & id, const Graph & g)
{
    FamilyGraph fg{id, g, expected_degrees(id)};
    if (sorted_degrees(g) != fg.expected_degrees)
        throw std::logic_error("construction of " + to_string(id) + " violates its degree contract");
    return fg;
}

}  // namespace

std::string_view family_tag(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::G_family: return "G";
    case FamilyKind::H: return "H";
    case FamilyKind::K_even: return "K";
    case FamilyKind::K1: return "K1";
    case FamilyKind::K2: return "K2";
    case FamilyKind::L: return "L";
    }
    return "?";
}

std::string to_string(const FamilyId & id)
{
    return std::string(family_tag(id.kind)) + ":" + std::to_string(id.delta) + "," + std::to_string(id.Delta);
}

FamilyId parse_family_id(std::string_view text)
{
    const auto colon = text.find(':');
    const auto comma = text.find(',');
    if (colon == std::string_view::npos || comma == std::string_view::npos || comma < colon)
        throw std::invalid_argument("family id must look like \"H:2,4\", got \"" + std::string(text) + "\"");
    const auto tag = text.substr(0, colon);
    FamilyId id{FamilyKind::G_family, 0, 0};
    if (tag == "G")
        id.kind = FamilyKind::G_family;
    else if (tag == "H")
        id.kind = FamilyKind::H;
    else if (tag == "K")
        id.kind = FamilyKind::K_even;
    else if (tag == "K1")
        id.kind = FamilyKind::K1;
    else if (tag == "K2")
        id.kind = FamilyKind::K2;
    else if (tag == "L")
        id.kind = FamilyKind::L;
    else
        throw std::invalid_argument("unknown family tag \"" + std::string(tag) + "\"");
    auto number = [&](std::string_view s) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw std::invalid_argument("bad family parameter \"" + std::string(s) + "\"");
        return v;
    };
    id.delta = number(text.substr(colon + 1, comma - colon - 1));
    id.Delta = number(text.substr(comma + 1));
    validate(id);
    return id;
}

void validate(const FamilyId & id)
{
    const int d = id.delta, D = id.Delta;
    if (d < 1)
        reject(id, "delta must be >= 1");
    if (D + 3 > kMaxVertices)
        reject(id, "Delta too large");
    if (id.kind == FamilyKind::G_family) {
        if (d > D)
            reject(id, "requires delta <= Delta");
        return;
    }
    if (d >= D)
        reject(id, "requires delta < Delta");
    switch (id.kind) {
    case FamilyKind::K_even:
        if (odd(d))
            reject(id, "K requires even delta (use K1/K2 for odd delta)");
        break;
    case FamilyKind::K1:
        if (!odd(d))
            reject(id, "K1 requires odd delta");
        break;
    case FamilyKind::K2:
        if (!odd(d))
            reject(id, "K2 requires odd delta");
        if (d == 1)
            reject(id, "no graph on Delta+2 vertices has its degree Delta-1 vertex adjacent to the degree-1 "
                       "vertex, so K2 does not exist for delta = 1");
        break;
    case FamilyKind::L:
        if (!odd(d * D))
            reject(id, "L requires delta * Delta odd");
        break;
    default: break;
    }
}

int family_order(const FamilyId & id)
{
    validate(id);
    switch (id.kind) {
    case FamilyKind::G_family:
    case FamilyKind::H: return id.Delta + 1;
    case FamilyKind::K_even:
    case FamilyKind::K1:
    case FamilyKind::K2: return id.Delta + 2;
    case FamilyKind::L: return id.Delta + 3;
    }
    return 0;
}

DegreeHistogram family_histogram(const FamilyId & id)
{
    validate(id);
    const int d = id.delta, D = id.Delta;
    DegreeHistogram h;
    switch (id.kind) {
    case FamilyKind::G_family:
        if (d == D)
            h.add(D, D + 1);
        else if (!odd(D * (d + 1)))
            h.add(d, D).add(D, 1);
        else if (d < D - 1)
            h.add(d, D - 1).add(d + 1, 1).add(D, 1);
        else
            h.add(d, D - 1).add(D, 2);
        break;
    case FamilyKind::H: h.add(d, 1).add(D - 1, D - d).add(D, d); break;
    case FamilyKind::K_even: h.add(d, 1).add(D, D + 1); break;
    case FamilyKind::K1:
    case FamilyKind::K2: h.add(d, 1).add(D - 1, 1).add(D, D); break;
    case FamilyKind::L: h.add(d, 1).add(D, D + 2); break;
    }
    return h;
}

std::vector<int> expected_degrees(const FamilyId & id) { return family_histogram(id).sorted_degrees(); }

FamilyGraph build_G(int delta, int Delta)
{
    const FamilyId id{FamilyKind::G_family, delta, Delta};
    validate(id);
    if (delta == Delta)
        return finish(id, complete_graph(Delta + 1));

    if (delta == Delta - 1 && odd(Delta * (delta + 1))) {
        // K_{Delta+1} minus a matching of (Delta-1)/2 edges.
        auto b = complete_builder(Delta + 1);
        for (int i = 0; i + 1 < Delta - 1; i += 2)
            b.remove_edge(i, i + 1);
        return finish(id, b.build());
    }

    // Hub 0 adjacent to everything; residual degrees on labels 1..Delta.
    std::vector<int> residual(static_cast<std::size_t>(Delta), delta - 1);
    if (odd(Delta * (delta + 1)))
        residual[0] = delta;
    const auto rest = realize_degree_sequence(residual);
    if (!rest)
        throw std::logic_error("residual sequence of " + to_string(id) + " is not graphical");
    GraphBuilder b(Delta + 1);
    for (int v = 1; v <= Delta; ++v)
        b.add_edge(0, v);
    for (const auto & e : rest->edges())
        b.add_edge(e.u + 1, e.v + 1);
    return finish(id, b.build());
}

FamilyGraph build_H(int delta, int Delta)
{
    const FamilyId id{FamilyKind::H, delta, Delta};
    validate(id);
    GraphBuilder b(Delta + 1);
    for (int u = 0; u < Delta; ++u)
        for (int v = u + 1; v < Delta; ++v)
            b.add_edge(u, v);
    for (int i = 0; i < delta; ++i)
        b.add_edge(i, Delta);
    return finish(id, b.build());
}

FamilyGraph build_K(int delta, int Delta)
{
    const FamilyId id{FamilyKind::K_even, delta, Delta};
    validate(id);
    auto b = complete_builder(Delta + 2);
    const int w = Delta + 1;
    for (int v = 0; v < w; ++v)
        b.remove_edge(v, w);
    for (int i = 0; i < delta; i += 2)
        b.remove_edge(i, i + 1);
    for (int i = 0; i < delta; ++i)
        b.add_edge(i, w);
    return finish(id, b.build());
}

FamilyGraph build_K1(int delta, int Delta)
{
    const FamilyId id{FamilyKind::K1, delta, Delta};
    validate(id);
    auto b = complete_builder(Delta + 2);
    const int w = Delta + 1;
    for (int v = 0; v < w; ++v)
        b.remove_edge(v, w);
    for (int i = 0; i <= delta - 1; i += 2)
        b.remove_edge(i, i + 1);
    for (int i = 0; i < delta; ++i)
        b.add_edge(i, w);
    return finish(id, b.build());
}

FamilyGraph build_K2(int delta, int Delta)
{
    const FamilyId id{FamilyKind::K2, delta, Delta};
    validate(id);
    auto b = complete_builder(Delta + 2);
    const int w = Delta + 1;
    for (int v = 0; v < w; ++v)
        b.remove_edge(v, w);
    // v_i has label i-1.
    b.remove_edge(delta - 3, delta - 1);
    b.remove_edge(delta - 2, delta - 1);
    for (int i = 0; i + 1 < delta - 3; i += 2)
        b.remove_edge(i, i + 1);
    for (int i = 0; i < delta; ++i)
        b.add_edge(i, w);
    return finish(id, b.build());
}

FamilyGraph build_L(int delta, int Delta)
{
    const FamilyId id{FamilyKind::L, delta, Delta};
    validate(id);
    const int cycle = Delta + 2;
    const int w = cycle;
    GraphBuilder b(Delta + 3);
    for (const auto & e : cycle_complement(cycle).edges())
        b.add_edge(e.u, e.v);
    for (int i = 0; i < delta; ++i)
        b.add_edge(i, w);
    // v_{2k} v_{2k+1} has labels 2k-1, 2k.
    for (int k = (delta + 1) / 2; k <= (Delta + 1) / 2; ++k)
        b.add_edge(2 * k - 1, 2 * k);
    return finish(id, b.build());
}

FamilyGraph build_family(const FamilyId & id)
{
    switch (id.kind) {
    case FamilyKind::G_family: return build_G(id.delta, id.Delta);
    case FamilyKind::H: return build_H(id.delta, id.Delta);
    case FamilyKind::K_even: return build_K(id.delta, id.Delta);
    case FamilyKind::K1: return build_K1(id.delta, id.Delta);
    case FamilyKind::K2: return build_K2(id.delta, id.Delta);
    case FamilyKind::L: return build_L(id.delta, id.Delta);
    }
    throw std::invalid_argument("unknown family kind");
}

double family_J_value(const FamilyId & id, const VertexIndexSpec & spec)
{
    validate(id);
    const int d = id.delta, D = id.Delta;
    auto h = [&](int x) { return spec.at(x); };
    switch (id.kind) {
    case FamilyKind::G_family:
        if (!odd(D * (d + 1)))
            return D * h(d) + h(D);
        return (D - 1) * h(d) + h(d + 1) + h(D);
    case FamilyKind::H: return h(d) + (D - d) * h(D - 1) + d * h(D);
    case FamilyKind::K_even: return (D + 1) * h(D) + h(d);
    case FamilyKind::K1:
    case FamilyKind::K2: return D * h(D) + h(D - 1) + h(d);
    case FamilyKind::L: return (D + 2) * h(D) + h(d);
    }
    return 0.0;
}

bool is_member(const Graph & g, const FamilyId & id, bool strict)
{
    try {
        validate(id);
    }
    catch (const std::invalid_argument &) {
        return false;
    }
    if (g.order() != family_order(id) || sorted_degrees(g) != expected_degrees(id))
        return false;
    if (!strict)
        return true;
    switch (id.kind) {
    case FamilyKind::G_family:
        return id.delta != id.Delta || isomorphic(g, complete_graph(id.Delta + 1));
    case FamilyKind::L: return true;
    default: return isomorphic(g, build_family(id).graph);
    }
}

}  // namespace zagreb
