#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace potgraph {

// Base of every error the core raises. The C API maps each subclass to a
// status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller supplied a value outside an operation's domain.
class InputError : public Error {
public:
    using Error::Error;
};

// Text could not be decoded; offset is the byte where decoding stopped.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A documented precondition of an operation does not hold.
class ContractError : public Error {
public:
    using Error::Error;
};

// A configured size or search limit would be exceeded.
class ResourceError : public Error {
public:
    ResourceError(const std::string& what, long long partial = -1)
        : Error(what), partial_(partial) {}

    // Work completed before the guard tripped, or -1 when not applicable.
    long long partial() const noexcept { return partial_; }

private:
    long long partial_;
};

}  // namespace potgraph
