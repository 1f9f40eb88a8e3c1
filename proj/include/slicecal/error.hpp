#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slicecal {

enum class ErrorCode {
    InvalidInput,     // malformed instance/schedule/spec document
    ConfigInvalid,    // generator configuration violates its invariants
    SpaceTooLarge,    // exhaustive enumeration refused
    ExactTooLarge,    // sweep asked for the exact solver beyond its budget
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace slicecal
