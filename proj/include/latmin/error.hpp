#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latmin {

enum class ErrorKind {
    DimensionMismatch,
    DimensionDeficient,
    ZeroVector,
    NotSymmetric,
    NotAVertex,
    SingularVertex,
    NotAmplePolytope,
    InvalidWeights,
    MixedProfile,
    NegativeParameter,
    ParseError,
    GenerationFailed,
    Usage,
    Io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace latmin
