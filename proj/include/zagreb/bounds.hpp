#pragma once

#include <string>
#include <vector>

#include "zagreb/families.hpp"
#include "zagreb/index.hpp"

namespace zagreb {

struct Hypothesis {
    std::string name;
    bool holds;
};

/// A closed-form lower bound together with the branch that produced it.
struct BoundResult {
    double value = 0.0;
    /// e.g. "nondecreasing:even", "nonincreasing:delta_even:H+K".
    std::string case_label;
    /// Families whose members attain the bound.
    std::vector<FamilyId> predicted_extremal;
    std::vector<Hypothesis> hypotheses_checked;
    /// True when the strictness hypotheses hold, i.e. the minimal graphs
    /// are exactly the members of predicted_extremal.
    bool characterization = false;
    /// Degree multiset realising `value`: value == J(witness).
    DegreeHistogram witness;
};

/// ceil(Delta (delta + 1) / 2).
int edge_lower_bound(int delta, int Delta);

/// Bound for non-decreasing h on [delta, Delta]. Throws hypothesis_error
/// otherwise.
BoundResult lower_bound_nondecreasing(const VertexIndexSpec & spec, int delta, int Delta);

/// Bound for non-increasing h on [delta, Delta]; delta = Delta gives
/// (Delta + 1) h(Delta). Throws hypothesis_error otherwise.
BoundResult lower_bound_nonincreasing(const VertexIndexSpec & spec, int delta, int Delta);

/// Non-decreasing bound when it applies (constant rules included), else the
/// non-increasing one. Multiplicative rules go through their log transform,
/// with the value mapped back by exp.
BoundResult lower_bound(const VertexIndexSpec & spec, int delta, int Delta);

/// M1^alpha bound: alpha >= 0 uses the non-decreasing bound,
/// alpha < 0 the non-increasing one.
BoundResult m1_alpha_lower_bound(double alpha, int delta, int Delta);

enum class MultiplicativeKind { pi1, nk, nk_star };

/// Closed-form bounds for Pi_1, NK and NK*; requires 2 <= delta < Delta.
/// Cross-checked against the log-domain route to 1e-9 relative.
BoundResult multiplicative_lower_bound(MultiplicativeKind kind, int delta, int Delta);

struct VertexWindow {
    int min_order;
    int max_order;
};

/// Range of vertex counts a minimal graph can have.
VertexWindow minimal_vertex_window(const VertexIndexSpec & spec, int delta, int Delta);

}  // namespace zagreb
