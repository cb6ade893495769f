#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zagreb {

/// An index or bound was evaluated outside the set where it is defined,
/// e.g. a degree-0 vertex or a multiplicative factor not exceeding 1.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The monotonicity a bound needs does not hold.
class hypothesis_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class unsupported_size : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Exhaustive search refused because its worst-case cost is too large.
class budget_exceeded : public std::runtime_error {
public:
    budget_exceeded(const std::string & what, double estimated_cost)
        : std::runtime_error(what), estimated_cost_(estimated_cost) {}

    double estimated_cost() const noexcept { return estimated_cost_; }

private:
    double estimated_cost_;
};

/// Malformed graph text. `offset` is the byte offset inside the record,
/// `line` the 1-based line number when reading from a stream (0 otherwise).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string & what, std::size_t offset, std::size_t line = 0)
        : std::runtime_error(what), offset_(offset), line_(line) {}

    std::size_t offset() const noexcept { return offset_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t offset_;
    std::size_t line_;
};

}  // namespace zagreb
