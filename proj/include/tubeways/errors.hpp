#pragma once

#include <stdexcept>
#include <string>

namespace tubeways {

enum class Errc {
    ParseError,
    GeneralPositionViolation,
    SameX,
    DegenerateTube,
    DegenerateContact,
    DegenerateOverlap,
    HoleNotRepresentable,
    NotSingle,
    AmbiguousOrder,
    ConstructionFailure,
    CapExceeded,
    Unsupported,
    EarSelectionFailure,
    EmptyAnchor,
    FragmentTooLarge,
    EmbeddingInvalid,
    Internal,
};

const char* errc_name(Errc c);

/// All library failures are thrown as Error; the code distinguishes
/// recoverable input problems (parse, degeneracy, caps) from internal
/// assertion failures.
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace tubeways
