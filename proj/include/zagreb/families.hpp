#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "zagreb/graph.hpp"
#include "zagreb/index.hpp"

namespace zagreb {

enum class FamilyKind { G_family, H, K_even, K1, K2, L };

/// Identifies an extremal family by kind and (delta, Delta). Text form is
/// "<tag>:<delta>,<Delta>" with tags G, H, K, K1, K2, L.
struct FamilyId {
    FamilyKind kind;
    int delta;
    int Delta;

    friend auto operator<=>(const FamilyId &, const FamilyId &) = default;
};

std::string_view family_tag(FamilyKind kind);
std::string to_string(const FamilyId & id);
FamilyId parse_family_id(std::string_view text);

/// Throws std::invalid_argument when the parameters violate the kind's
/// constraints.
void validate(const FamilyId & id);

/// Vertex count of every member.
int family_order(const FamilyId & id);

/// Degree multiset (non-decreasing) shared by every member.
std::vector<int> expected_degrees(const FamilyId & id);

struct FamilyGraph {
    FamilyId id;
    Graph graph;
    std::vector<int> expected_degrees;
};

// Labeling: v_1..v_k are labels 0..k-1; the low-degree vertex w, when the
// family has one, is always the last label. build_G puts the hub at label 0.

/// Representative of the edge-minimal family on Delta+1 vertices.
FamilyGraph build_G(int delta, int Delta);
/// K_Delta on v_1..v_Delta plus w adjacent to v_1..v_delta.
FamilyGraph build_H(int delta, int Delta);
/// delta even: K_{Delta+1} minus v_1v_2, ..., v_{delta-1}v_delta, plus w
/// adjacent to v_1..v_delta.
FamilyGraph build_K(int delta, int Delta);
/// delta odd: K_{Delta+1} minus v_1v_2, ..., v_delta v_{delta+1}, plus w
/// adjacent to v_1..v_delta. The degree Delta-1 vertex v_{delta+1} is not
/// adjacent to w.
FamilyGraph build_K1(int delta, int Delta);
/// delta odd >= 3: K_{Delta+1} minus v_{delta-2}v_delta, v_{delta-1}v_delta
/// and v_1v_2, ..., v_{delta-4}v_{delta-3}, plus w adjacent to v_1..v_delta.
/// The degree Delta-1 vertex v_delta is adjacent to w. Rejected for delta = 1,
/// where no such graph exists.
FamilyGraph build_K2(int delta, int Delta);
/// delta * Delta odd: complement of the cycle v_1..v_{Delta+2}, plus w
/// adjacent to v_1..v_delta, plus v_{2k}v_{2k+1} for
/// (delta+1)/2 <= k <= (Delta+1)/2.
FamilyGraph build_L(int delta, int Delta);

FamilyGraph build_family(const FamilyId & id);

/// Closed-form J of any family member (additive rules).
double family_J_value(const FamilyId & id, const VertexIndexSpec & spec);
DegreeHistogram family_histogram(const FamilyId & id);

/// Degree-multiset membership. With `strict`, kinds covered by a uniqueness
/// result (H, K_even, K1, K2, and G with delta = Delta) also require
/// isomorphism to the constructed representative.
bool is_member(const Graph & g, const FamilyId & id, bool strict = false);

}  // namespace zagreb
