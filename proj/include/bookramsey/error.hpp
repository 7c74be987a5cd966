#pragma once

#include <stdexcept>
#include <string>

namespace bookramsey {

// Raised when an operation's precondition on its arguments is violated.
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a serialized document (witness, spec record, certificate) is malformed.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool condition, const std::string& message)
{
    if (!condition)
        throw ArgumentError(message);
}

} // namespace bookramsey
