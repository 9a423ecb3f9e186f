#pragma once

#include <stdexcept>
#include <string>

namespace clutterlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller violated a documented precondition (bad dimensions, invalid input, ...).
class UsageError : public Error {
public:
    explicit UsageError(const std::string& m) : Error("usage error: " + m) {}
};

/// A configured resource cap (ray count, step budget, size cap) was hit.
/// Results are never truncated silently; this is raised instead.
class ResourceExceeded : public Error {
public:
    explicit ResourceExceeded(const std::string& m) : Error("resource exceeded: " + m) {}
};

/// An internal consistency check failed. Always indicates a bug.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& m) : Error("internal error: " + m) {}
};

} // namespace clutterlab
