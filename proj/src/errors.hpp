#ifndef TWC_ERRORS_HPP
#define TWC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twc {

// Base for all engine errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched session-wide settings (truncation order, base dimension, ...).
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Scenario / literal syntax errors. Carries a 1-based line number when known.
struct ParseError : Error {
    explicit ParseError(const std::string& what, int line = 0) : Error(what), line(line) {}
    int line = 0;
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& what) : Error(what) {}
};

// A candidate twist failed normalization or the cocycle condition.
struct TwistRejected : Error {
    TwistRejected(const std::string& what, int order) : Error(what), failing_order(order) {}
    int failing_order = -1;
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

// A construction was requested without its certificate (quasi-commutativity,
// triangularity, verified twist, ...).
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

}  // namespace twc

#endif
