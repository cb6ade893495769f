#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zagreb::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2 };

struct Range {
    int lo = 1;
    int hi = 1;
};

/// Parses "3" or "1..4".
Range parse_range(const std::string & text);

struct SweepConfig {
    std::string claim = "bound";  // bound | edges | uniqueness-H | uniqueness-K | window
    Range delta_range;
    Range Delta_range;
    std::vector<double> alphas;
    std::vector<std::string> indices;
    std::optional<int> n_max;
    std::string format = "json";  // json | csv
    std::string output;           // empty: stdout
    int workers = 1;
    bool strict_extremal = false;
};

/// Runs the command line with the given streams and returns the exit code.
int run(int argc, const char * const * argv, std::istream & in, std::ostream & out, std::ostream & err);

}  // namespace zagreb::cli
