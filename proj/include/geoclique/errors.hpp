#pragma once

#include <stdexcept>
#include <string>

namespace geoclique {

/// Input that cannot be parsed or violates a structural precondition of the
/// data format (out-of-range vertex, self-loop, bad JSON field).
class MalformedInput : public std::runtime_error {
public:
    MalformedInput(const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ", column " +
                                            std::to_string(column) + ")"
                                      : what),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// A solver or oracle declined to run: size caps, unequal radii without
/// force, faithful constants out of reach.
class Refusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A subgraph that the class promise says is bipartite turned out not to be,
/// or a constructive coloring was improper. Raised only in strict mode.
class AssumptionViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller broke an API precondition (bad parameters, wrong branch).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A geometric construction did not reach verified margins within its
/// shrink budget.
class ConstructionInfeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace geoclique
