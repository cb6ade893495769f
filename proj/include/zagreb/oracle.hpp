#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zagreb/bounds.hpp"
#include "zagreb/enumeration.hpp"
#include "zagreb/families.hpp"
#include "zagreb/index.hpp"

namespace zagreb {

enum class Verdict { pass, fail, skipped, reported };

std::string_view to_string(Verdict v);

struct Check {
    std::string name;
    Verdict verdict;
    std::string detail;
};

struct VerifyOptions {
    int workers = 1;
    /// Largest vertex count searched; defaults to Delta + 3.
    std::optional<int> n_max;
    /// Require isomorphism to the constructed representative, not only a
    /// matching degree multiset, when checking argmins against families.
    bool strict_extremal = false;
};

/// Outcome of one verification run. Exact values are "p/q" strings.
struct VerificationReport {
    std::string claim;  // "bound", "uniqueness", "edge_bound", "window"
    std::string index;
    std::optional<double> alpha;
    int delta = 0;
    int Delta = 0;
    int n_min = 0;
    int n_max = 0;

    std::optional<BoundResult> bound;
    std::optional<std::string> bound_exact;

    bool oracle_empty = true;
    double oracle_min = 0.0;
    std::optional<std::string> oracle_exact;
    std::vector<OrderMinimum> per_order;
    /// graph6 of each argmin isomorphism class, sorted.
    std::vector<std::string> argmins;
    /// Families (as "H:1,3" etc.) each argmin belongs to.
    std::vector<std::vector<std::string>> argmin_families;

    /// Uniqueness runs: graph6 of every class found.
    std::vector<std::string> classes;

    std::vector<Check> checks;
    std::vector<std::pair<std::string, std::uint64_t>> counts;

    /// No check failed.
    bool passed() const;
};

/// Bound against the exhaustive minimum over n in [Delta+1, n_max].
/// Multiplicative rules are searched through their log transform.
VerificationReport verify_bound(const VertexIndexSpec & spec, int delta, int Delta, const VerifyOptions & options = {});

enum class UniquenessKind { H, K };

/// Counts the isomorphism classes with the family's degree multiset.
/// Requires delta < Delta <= 6.
VerificationReport verify_uniqueness(UniquenessKind kind, int delta, int Delta, const VerifyOptions & options = {});

/// Minimum edge count against ceil(Delta (delta+1) / 2), with equality
/// exactly on degree-multiset members of the G family. Requires Delta <= 6.
VerificationReport verify_edge_bound(int delta, int Delta, const VerifyOptions & options = {});

/// For non-increasing h and delta < Delta: searching up to n_max (default
/// Delta + 4) finds nothing below the minimum over the vertex window.
VerificationReport verify_window(const VertexIndexSpec & spec, int delta, int Delta, const VerifyOptions & options = {});

/// Family ids of every kind valid at (delta, Delta).
std::vector<FamilyId> families_at(int delta, int Delta);

}  // namespace zagreb
