#include <doctest.h>

#include "zagreb/canonical.hpp"
#include "zagreb/errors.hpp"
#include "zagreb/oracle.hpp"
#include "zagreb/report.hpp"

using namespace zagreb;

namespace {

const Check & check_named(const VerificationReport & r, const std::string & name)
{
    for (const auto & c : r.checks)
        if (c.name == name)
            return c;
    FAIL("missing check " << name);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("verify_bound examples")
{
    const auto sq = verify_bound(m1_alpha_spec(1), 2, 4);
    CHECK(sq.passed());
    CHECK(sq.oracle_min == 32);
    CHECK(check_named(sq, "argmins_in_predicted_families").verdict == Verdict::pass);
    for (const auto & fams : sq.argmin_families)
        CHECK(std::find(fams.begin(), fams.end(), "G:2,4") != fams.end());

    const auto id = verify_bound(m1_alpha_spec(-0.5), 1, 3);
    CHECK(id.passed());
    CHECK(id.oracle_exact == std::optional<std::string>("7/3"));
    REQUIRE(id.argmins.size() == 1);
    CHECK(id.argmins[0] == canonical_form(build_H(1, 3).graph).graph6);

    const auto flat = verify_bound(m1_alpha_spec(0), 1, 2);
    CHECK(flat.passed());
    CHECK(flat.oracle_min == 3);
    CHECK(check_named(flat, "argmins_in_predicted_families").verdict == Verdict::skipped);
}

TEST_CASE("multiplicative rules go through the log transform")
{
    const auto nk = verify_bound(std::get<VertexIndexSpec>(catalog("nk")), 2, 3);
    CHECK(nk.passed());
    CHECK(nk.oracle_min == 36);
    CHECK(nk.oracle_exact == std::optional<std::string>("36"));
    CHECK(check_named(nk, "closed_form_agrees").verdict == Verdict::pass);
    CHECK_THROWS_AS(verify_bound(std::get<VertexIndexSpec>(catalog("nk")), 1, 3), domain_error);
}

TEST_CASE("uniqueness examples")
{
    const auto h = verify_uniqueness(UniquenessKind::H, 2, 4);
    CHECK(h.passed());
    CHECK(h.classes.size() == 1);
    const auto k = verify_uniqueness(UniquenessKind::K, 2, 3);
    CHECK(k.passed());
    CHECK(k.classes == std::vector<std::string>{canonical_form(build_K(2, 3).graph).graph6});
    const auto k34 = verify_uniqueness(UniquenessKind::K, 3, 4);
    CHECK(k34.classes.size() == 2);
    CHECK(k34.passed());
    const auto k13 = verify_uniqueness(UniquenessKind::K, 1, 3);
    CHECK(check_named(k13, "class_count").verdict == Verdict::reported);
    CHECK_THROWS_AS(verify_uniqueness(UniquenessKind::H, 1, 7), budget_exceeded);
}

TEST_CASE("edge bound examples")
{
    const auto e23 = verify_edge_bound(2, 3);
    CHECK(e23.passed());
    CHECK(e23.oracle_min == 5);
    const auto e13 = verify_edge_bound(1, 3);
    CHECK(e13.oracle_min == 3);
    REQUIRE(e13.argmins.size() == 1);
    CHECK(e13.argmins[0] == canonical_form(Graph(4, {{0, 1}, {0, 2}, {0, 3}})).graph6);
    CHECK(verify_edge_bound(3, 3).oracle_min == 6);
}

TEST_CASE("window check")
{
    const auto w = verify_window(m1_alpha_spec(-1), 1, 3);
    CHECK(w.passed());
    CHECK(w.n_max == 7);
    // increasing rules: minimal graphs have exactly Delta+1 vertices
    const auto up = verify_window(m1_alpha_spec(1), 1, 3);
    CHECK(up.passed());
    CHECK(up.n_min == 4);
    CHECK_THROWS_AS(verify_window(parse_table("1:1,2:2,3:1"), 1, 3), hypothesis_error);
}

TEST_CASE("report serialization")
{
    const auto r = verify_bound(m1_alpha_spec(-0.5), 1, 3);
    const Json j = to_json(r);
    CHECK(j["verdict"] == "pass");
    CHECK(j["bound"]["exact"] == "7/3");
    CHECK(j["oracle"]["argmins"].size() == 1);
    CHECK(csv_row(r).rfind("1,3,m1_alpha:-0.5,-0.5,2.33333333333,", 0) == 0);
    CHECK(format_value(12) == "12");
    CHECK(format_value(7.0 / 3) == "2.33333333333");
    CHECK(format_value(-0.0) == "0");
    CHECK(format_value(1e20) == "1e+20");
}
