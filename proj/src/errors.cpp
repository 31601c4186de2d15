#include "pomo/errors.hpp"

namespace pomo {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::CycleDetected: return "CycleDetected";
        case ErrorKind::DuplicateElement: return "DuplicateElement";
        case ErrorKind::UnknownElement: return "UnknownElement";
        case ErrorKind::ApexCollision: return "ApexCollision";
        case ErrorKind::DimensionOutOfRange: return "DimensionOutOfRange";
        case ErrorKind::NotAMatching: return "NotAMatching";
        case ErrorKind::NotADownSet: return "NotADownSet";
        case ErrorKind::MissingValue: return "MissingValue";
        case ErrorKind::CyclicMatching: return "CyclicMatching";
        case ErrorKind::SynthesisFailed: return "SynthesisFailed";
        case ErrorKind::InvariantBroken: return "InvariantBroken";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::InputNotValidated: return "InputNotValidated";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
    }
    return "Error";
}

}  // namespace pomo
