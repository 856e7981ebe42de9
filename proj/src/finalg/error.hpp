#pragma once

#include <stdexcept>
#include <string>

namespace finalg {

// Error taxonomy mirrors the CLI exit-code contract:
//   ArgumentError -> 1 (bad input / usage / parse errors)
//   ResourceError -> 2 (a size guard refused the computation)
//   PreconditionError -> 3 (a stated operation precondition failed)
struct ArgumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] inline void throw_guard(const char* guard_name, long long actual, long long limit) {
    throw ResourceError("guard " + std::string(guard_name) + " exceeded: " +
                        std::to_string(actual) + " > " + std::to_string(limit));
}

}  // namespace finalg
