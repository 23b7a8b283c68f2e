#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tnl {

enum class ErrorKind {
    InvalidArgument,
    Domain,
    UnsupportedKernel,
    DegenerateRoots,
    DegenerateProblem,
    IllPosed,
    Range,
    InsufficientData,
    InternalConsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit code without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool condition, ErrorKind kind, const char* what) {
    if (!condition) fail(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what) {
    if (!condition) fail(kind, what);
}

}  // namespace tnl
