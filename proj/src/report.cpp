#include "zagreb/report.hpp"

#include <cmath>
#include <cstdio>

namespace zagreb {

namespace {

Json nullable(const std::optional<std::string> & s) { return s ? Json(*s) : Json(nullptr); }

std::string csv_field(const std::string & s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string format_value(double v)
{
    char buf[64];
    if (v == 0.0)
        v = 0.0;
    if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15)
        std::snprintf(buf, sizeof buf, "%.0f", v);
    else
        std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Json to_json(const BoundResult & b)
{
    Json j;
    j["value"] = b.value;
    j["text"] = format_value(b.value);
    j["case"] = b.case_label;
    Json predicted = Json::array();
    for (const auto & id : b.predicted_extremal)
        predicted.push_back(to_string(id));
    j["predicted_extremal"] = predicted;
    Json hyps = Json::array();
    for (const auto & h : b.hypotheses_checked)
        hyps.push_back({{"name", h.name}, {"holds", h.holds}});
    j["hypotheses"] = hyps;
    j["characterization"] = b.characterization;
    j["witness_degrees"] = b.witness.sorted_degrees();
    return j;
}

Json to_json(const VerificationReport & r)
{
    Json j;
    j["claim"] = r.claim;
    j["class"] = {{"delta", r.delta}, {"Delta", r.Delta}, {"n_min", r.n_min}, {"n_max", r.n_max}};
    j["index"] = r.index;
    j["alpha"] = r.alpha ? Json(*r.alpha) : Json(nullptr);
    if (r.bound) {
        Json b = to_json(*r.bound);
        b["exact"] = nullable(r.bound_exact);
        j["bound"] = b;
    }
    if (r.claim == "uniqueness") {
        j["classes"] = r.classes;
    }
    else {
        Json o;
        o["empty"] = r.oracle_empty;
        o["min"] = r.oracle_empty ? Json(nullptr) : Json(r.oracle_min);
        o["text"] = r.oracle_empty ? Json(nullptr) : Json(format_value(r.oracle_min));
        o["exact"] = nullable(r.oracle_exact);
        o["argmins"] = r.argmins;
        o["argmin_families"] = r.argmin_families;
        Json orders = Json::array();
        for (const auto & om : r.per_order)
            orders.push_back({{"n", om.n},
                              {"empty", om.empty},
                              {"min", om.empty ? Json(nullptr) : Json(om.minimum)},
                              {"labeled_argmins", om.labeled_argmins},
                              {"leaves_visited", om.leaves_visited}});
        o["per_order"] = orders;
        j["oracle"] = o;
    }
    Json checks = Json::array();
    for (const auto & c : r.checks)
        checks.push_back({{"name", c.name}, {"verdict", std::string(to_string(c.verdict))}, {"detail", c.detail}});
    j["checks"] = checks;
    Json counts = Json::object();
    for (const auto & [k, v] : r.counts)
        counts[k] = v;
    j["counts"] = counts;
    j["verdict"] = r.passed() ? "pass" : "fail";
    return j;
}

Json to_json(const std::vector<VerificationReport> & reports)
{
    Json j = Json::array();
    for (const auto & r : reports)
        j.push_back(to_json(r));
    return j;
}

std::string csv_row(const VerificationReport & r)
{
    std::string row = std::to_string(r.delta) + "," + std::to_string(r.Delta) + "," + csv_field(r.index) + ",";
    row += r.alpha ? format_value(*r.alpha) : "";
    row += ",";
    row += r.bound ? format_value(r.bound->value) : "";
    row += ",";
    row += r.bound ? csv_field(r.bound->case_label) : "";
    row += ",";
    row += r.oracle_empty ? "" : format_value(r.oracle_min);
    row += ",";
    if (r.bound && !r.oracle_empty) {
        const bool exact_tie = r.bound_exact && r.oracle_exact && *r.bound_exact == *r.oracle_exact;
        row += format_value(exact_tie ? 0.0 : r.oracle_min - r.bound->value);
    }
    row += ",";
    row += r.passed() ? "pass" : "fail";
    return row;
}

}  // namespace zagreb
