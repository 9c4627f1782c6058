#pragma once

#include <stdexcept>
#include <string>

namespace srcon {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    using Error::Error;
};

struct EmptyGraphError : Error {
    using Error::Error;
};

// Thrown when shortest-path enumeration or rainbow verification exceeds
// its configured budget. Converts exponential blowup into a clean error.
struct PathBudgetExceeded : Error {
    using Error::Error;
};

struct SizeGuardExceeded : Error {
    using Error::Error;
};

struct BackendError : Error {
    using Error::Error;
};

struct ExhaustedError : Error {
    using Error::Error;
};

}  // namespace srcon
