#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace folkman {

// Bad argument to a library operation (out-of-range vertex, malformed tuple, ...).
struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The requested object is not defined for these parameters (e.g. a witness
// graph with m < p+2).
struct ConstructionUndefined : std::domain_error {
    using std::domain_error::domain_error;
};

// Parameters outside the range covered by the supporting theorems (p < 3).
struct OutOfTheoremRange : std::domain_error {
    using std::domain_error::domain_error;
};

// A size or node-count guard tripped; the result would not be trustworthy
// within the configured budget.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed serialized input. byte_offset points at the offending byte.
struct ParseError : std::runtime_error {
    std::size_t byte_offset;
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
};

// A certificate failed re-validation on replay.
struct ReplayError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace folkman
