#pragma once

#include <stdexcept>
#include <string>

namespace sdlab {

// Base class for all library errors so callers can catch everything at once.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& msg) : Error(msg) {}
};

struct NotHermitianError : Error {
    explicit NotHermitianError(const std::string& msg) : Error(msg) {}
};

struct NotPositiveDefiniteError : Error {
    explicit NotPositiveDefiniteError(const std::string& msg) : Error(msg) {}
};

struct NotInvertibleError : Error {
    explicit NotInvertibleError(const std::string& msg) : Error(msg) {}
};

struct NotPsdError : Error {
    explicit NotPsdError(const std::string& msg) : Error(msg) {}
};

struct NotInAlgebraError : Error {
    explicit NotInAlgebraError(const std::string& msg) : Error(msg) {}
};

struct NoConvergenceError : Error {
    explicit NoConvergenceError(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct UnknownEnsembleError : Error {
    explicit UnknownEnsembleError(const std::string& msg) : Error(msg) {}
};

// Parse failures carry the byte offset of the offending character.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t at)
        : Error(msg + " (byte " + std::to_string(at) + ")"), offset(at) {}
};

} // namespace sdlab
