#pragma once

#include <stdexcept>
#include <string>

namespace spinex {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad parameter: out-of-range value, unknown enum spelling, invalid index.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Malformed data: non-rectangular input, non-finite values, duplicate names.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Unreadable or malformed file content (CSV, JSON report).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace spinex
