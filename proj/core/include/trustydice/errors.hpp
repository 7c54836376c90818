#pragma once

#include <stdexcept>
#include <string>

namespace trustydice {

// Bad inputs: malformed files, out-of-domain arguments, violated preconditions.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A requested exhaustive computation exceeds its work budget.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Total sample weight cannot fill a single group.
struct InsufficientDataError : ValidationError {
    double required_min;
    InsufficientDataError(const std::string& msg, double required)
        : ValidationError(msg), required_min(required) {}
};

}  // namespace trustydice
