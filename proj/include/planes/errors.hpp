#pragma once

#include <stdexcept>
#include <string>

namespace planes {

enum class Err {
    DuplicateLabel,
    LineTooSmall,
    AxiomB,
    UnknownPoint,
    SamePoint,
    UnknownLine,
    SameLine,
    NotDistinct,
    NotParallel,
    StaleLabel,
    ParseError,
    UnsupportedOrder,
    NoEmbedding,
    Ambiguous,
    MalformedGadget,
    LogMismatch,
    NotApplicable,
    UnknownElement,
};

const char* err_name(Err e);

/// Domain error carrying a stable code plus a message that pinpoints the
/// offending labels.
class PlaneError : public std::runtime_error {
public:
    PlaneError(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

} // namespace planes
