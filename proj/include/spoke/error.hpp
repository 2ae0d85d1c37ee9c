#pragma once

#include <stdexcept>
#include <string>

namespace spoke {

enum class ErrorKind {
    DomainError,
    GroupMismatch,
    NotInBurnsideImage,
    AugmentationObstruction,
    NotASublattice,
    NoSolution,
    DivisibilityViolation,
    LevelOutOfRange,
    TheoremViolation,
    ZeroElement,
    ParseError,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::GroupMismatch: return "GroupMismatch";
        case ErrorKind::NotInBurnsideImage: return "NotInBurnsideImage";
        case ErrorKind::AugmentationObstruction: return "AugmentationObstruction";
        case ErrorKind::NotASublattice: return "NotASublattice";
        case ErrorKind::NoSolution: return "NoSolution";
        case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
        case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
        case ErrorKind::TheoremViolation: return "TheoremViolation";
        case ErrorKind::ZeroElement: return "ZeroElement";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "UnknownError";
}

class SpokeError : public std::runtime_error {
public:
    SpokeError(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw SpokeError(kind, msg);
}

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

}  // namespace spoke
