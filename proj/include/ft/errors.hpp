#pragma once

#include <stdexcept>
#include <string>

namespace ft {

/// Caller misused the API: mixed algebras, out-of-range arguments, bad flags.
class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

/// Input data violates a required identity; the message names the failing one.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Input is well-formed but outside what the engine supports.
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

/// Engine invariant broke; always a bug, never a user error.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace ft
