#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace injhom {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

class SizeCapExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed edge-list input; `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string & what) :
        Error("line " + std::to_string(line) + ": " + what),
        line_(line)
    {
    }

    auto line() const -> std::size_t { return line_; }

private:
    std::size_t line_;
};

} // namespace injhom
