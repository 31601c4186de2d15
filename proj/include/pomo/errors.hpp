#pragma once

#include <stdexcept>
#include <string>

namespace pomo {

enum class ErrorKind {
    CycleDetected,
    DuplicateElement,
    UnknownElement,
    ApexCollision,
    DimensionOutOfRange,
    NotAMatching,
    NotADownSet,
    MissingValue,
    CyclicMatching,
    SynthesisFailed,
    InvariantBroken,
    TooLarge,
    InputNotValidated,
    ParseError,
    ValidationError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

}  // namespace pomo
