#pragma once

#include <stdexcept>
#include <string>

namespace ribbonlift {

enum class ErrorCode {
    NotPermutation,
    NotInvolution,
    EmptyGraph,
    LowValence,
    Disconnected,
    InvalidGenus,
    UnknownVertex,
    MissingColour,
    NotPlanar,
    NotGenusZero,
    CrossingValence,
    BadTrueVertex,
    ClosedStrand,
    NotFourValent,
    UnknownCrossing,
    UnremovableSelfCrossing,
    NotDoubleOccurrence,
    NegativeRamification,
    UnknownGraph,
    DartSetMismatch,
    AlphaMismatch,
    SyntaxError,
    UnknownCommand,
    BadArgument,
};

const char* code_name(ErrorCode code);

// Domain error carrying a stable code for CLI reporting.
class RibbonError : public std::runtime_error {
public:
    RibbonError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw RibbonError(code, message);
}

} // namespace ribbonlift
