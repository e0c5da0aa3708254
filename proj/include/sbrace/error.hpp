#pragma once

#include <stdexcept>
#include <string>

namespace sbrace {

enum class ErrorCode {
    NotClosed,
    NoIdentityAtZero,
    NotAssociative,
    MissingInverse,
    OrderTooLarge,
    ImageNotAutomorphism,
    NotHomomorphic,
    AddNotGroup,
    MulNotGroup,
    BraceAxiomFails,
    RBAxiomFails,
    ActionInvalid,
    RRBAxiomFails,
    NotRRBHom,
    NotBraceHom,
    PreconditionFails,
    CoeffNotAbelian,
    NotGoodTriplet,
    SearchTooLarge,
    NotCocycle,
    NotASection,
    NotEndomorphism,
    NotAntiAction,
    ModuleLawFails,
    NotAnExtension,
    ModuleConditionFails,
    DiagramFails,
    NotAnIdeal,
    HypothesisFails,
    LiftFails,
    InvalidInput,
    InternalDefect,
};

const char* error_name(ErrorCode code);

class AlgebraError : public std::runtime_error {
public:
    AlgebraError(ErrorCode code, const std::string& detail);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

// Outcome of a property check; `witness` names the first violation.
struct Verdict {
    bool holds = true;
    std::string witness;

    explicit operator bool() const { return holds; }
    static Verdict ok() { return {}; }
    static Verdict no(std::string why) { return {false, std::move(why)}; }
};

}  // namespace sbrace
