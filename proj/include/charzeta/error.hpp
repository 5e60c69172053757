#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace charzeta {

enum class ErrorKind {
    invalid_precision,
    invalid_character,
    format,
    pole,
    unsupported_case,
    parameter,
    primitivity,
    singular_input,
    non_convergence,
    insufficient_range,
    overflow,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_precision: return "invalid-precision";
        case ErrorKind::invalid_character: return "invalid-character";
        case ErrorKind::format: return "format";
        case ErrorKind::pole: return "pole";
        case ErrorKind::unsupported_case: return "unsupported-case";
        case ErrorKind::parameter: return "parameter";
        case ErrorKind::primitivity: return "primitivity";
        case ErrorKind::singular_input: return "singular-input";
        case ErrorKind::non_convergence: return "non-convergence";
        case ErrorKind::insufficient_range: return "insufficient-range";
        case ErrorKind::overflow: return "overflow";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const std::string& what) {
    if (!condition) fail(kind, what);
}

}  // namespace charzeta
