#pragma once

#include <stdexcept>
#include <string>

namespace spreadlab {

/// Malformed or invalid graph input. Maps to CLI exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its declared domain. CLI exit code 3.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Two routes that must agree disagreed. This is the loudest alarm the
/// tool can raise; it falsifies the implementation, not the input.
/// CLI exit code 1.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace spreadlab
