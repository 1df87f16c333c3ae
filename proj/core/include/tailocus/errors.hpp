#pragma once

#include <stdexcept>
#include <string>

namespace tailocus {

// Raised for malformed external input: unreadable JSON, schema mismatches,
// tail/edge wiring problems. The CLI maps this to exit code 3.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tailocus
