#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nsl {

using Int = std::int64_t;

enum class ErrorKind {
    EmptyInput,
    GcdNotOne,
    NotAMember,
    AmbientMismatch,
    LengthMismatch,
    CapExceeded,
    EnumerationLimitExceeded,
    WindowTooNarrow,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failure; `position` is the 0-based character offset in the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(ErrorKind::ParseError, what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace nsl
