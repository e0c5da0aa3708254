#include "sbrace/error.hpp"

namespace sbrace {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::NoIdentityAtZero: return "NoIdentityAtZero";
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::MissingInverse: return "MissingInverse";
        case ErrorCode::OrderTooLarge: return "OrderTooLarge";
        case ErrorCode::ImageNotAutomorphism: return "ImageNotAutomorphism";
        case ErrorCode::NotHomomorphic: return "NotHomomorphic";
        case ErrorCode::AddNotGroup: return "AddNotGroup";
        case ErrorCode::MulNotGroup: return "MulNotGroup";
        case ErrorCode::BraceAxiomFails: return "BraceAxiomFails";
        case ErrorCode::RBAxiomFails: return "RBAxiomFails";
        case ErrorCode::ActionInvalid: return "ActionInvalid";
        case ErrorCode::RRBAxiomFails: return "RRBAxiomFails";
        case ErrorCode::NotRRBHom: return "NotRRBHom";
        case ErrorCode::NotBraceHom: return "NotBraceHom";
        case ErrorCode::PreconditionFails: return "PreconditionFails";
        case ErrorCode::CoeffNotAbelian: return "CoeffNotAbelian";
        case ErrorCode::NotGoodTriplet: return "NotGoodTriplet";
        case ErrorCode::SearchTooLarge: return "SearchTooLarge";
        case ErrorCode::NotCocycle: return "NotCocycle";
        case ErrorCode::NotASection: return "NotASection";
        case ErrorCode::NotEndomorphism: return "NotEndomorphism";
        case ErrorCode::NotAntiAction: return "NotAntiAction";
        case ErrorCode::ModuleLawFails: return "ModuleLawFails";
        case ErrorCode::NotAnExtension: return "NotAnExtension";
        case ErrorCode::ModuleConditionFails: return "ModuleConditionFails";
        case ErrorCode::DiagramFails: return "DiagramFails";
        case ErrorCode::NotAnIdeal: return "NotAnIdeal";
        case ErrorCode::HypothesisFails: return "HypothesisFails";
        case ErrorCode::LiftFails: return "LiftFails";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::InternalDefect: return "InternalDefect";
    }
    return "Unknown";
}

AlgebraError::AlgebraError(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

void fail(ErrorCode code, const std::string& detail) { throw AlgebraError(code, detail); }

}  // namespace sbrace
