#pragma once

#include <stdexcept>
#include <string>

namespace loggw {

// Malformed or inconsistent input. CLI exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input exceeds the supported rank or size limits. CLI exit code 3.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration produced more candidates than the configured cap. CLI exit code 4.
struct EnumerationCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed result failed an internal consistency check. CLI exit code 5.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace loggw
