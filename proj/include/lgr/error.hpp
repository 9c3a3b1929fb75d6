#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lgr {

enum class ErrorCode {
    Syntax,
    InvalidDimensions,
    EmptyLayer,
    LayerOutOfRange,
    LabelOutOfRange,
    DuplicateLabel,
    SelfLoop,
    DuplicateEdge,
    EdgeToAbsentVertex,
    NonAdjacentInterEdge,
    CdsOnDisconnected,
    InstanceTooLarge,
    Unsupported,
};

std::string_view to_string(ErrorCode code);

/// Every input or precondition failure surfaced by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace lgr
