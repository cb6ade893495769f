#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zagreb/bounds.hpp"
#include "zagreb/oracle.hpp"

namespace zagreb {

using Json = nlohmann::ordered_json;

/// 12 significant digits; integral values print without a decimal point.
std::string format_value(double v);

Json to_json(const BoundResult & b);
Json to_json(const VerificationReport & r);
Json to_json(const std::vector<VerificationReport> & reports);

inline constexpr const char * kCsvHeader = "delta,Delta,index,alpha,bound,case,oracle_min,gap,verdict";

std::string csv_row(const VerificationReport & r);

}  // namespace zagreb
