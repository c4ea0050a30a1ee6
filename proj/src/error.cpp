#include "qhopf/error.hpp"

namespace qhopf {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::NotASubfield: return "NotASubfield";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::SlotOutOfRange: return "SlotOutOfRange";
        case ErrorKind::OrderMismatch: return "OrderMismatch";
        case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorKind::MalformedInput: return "MalformedInput";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::ModulusUnavailable: return "ModulusUnavailable";
        case ErrorKind::DegenerateIntegralSpace: return "DegenerateIntegralSpace";
        case ErrorKind::NoCointegral: return "NoCointegral";
        case ErrorKind::NonUniqueCointegral: return "NonUniqueCointegral";
        case ErrorKind::NoPivot: return "NoPivot";
        case ErrorKind::NoSolution: return "NoSolution";
        case ErrorKind::NonUnique: return "NonUnique";
        case ErrorKind::TheoremViolation: return "TheoremViolation";
        case ErrorKind::NoRMatrix: return "NoRMatrix";
        case ErrorKind::MissingOmegaHat: return "MissingOmegaHat";
        case ErrorKind::MissingRibbon: return "MissingRibbon";
        case ErrorKind::NotInAlphaZ: return "NotInAlphaZ";
        case ErrorKind::BadBeta: return "BadBeta";
        case ErrorKind::NotAHopfAlgebra: return "NotAHopfAlgebra";
    }
    return "Error";
}

bool Error::is_input_error() const noexcept {
    switch (kind_) {
        case ErrorKind::FieldMismatch:
        case ErrorKind::NotASubfield:
        case ErrorKind::NotCoprime:
        case ErrorKind::Parse:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::SlotOutOfRange:
        case ErrorKind::OrderMismatch:
        case ErrorKind::AlgebraMismatch:
        case ErrorKind::MalformedInput:
        case ErrorKind::NoPivot:
        case ErrorKind::NoRMatrix:
        case ErrorKind::MissingOmegaHat:
        case ErrorKind::MissingRibbon:
        case ErrorKind::BadBeta:
        case ErrorKind::NotAHopfAlgebra:
            return true;
        default:
            return false;
    }
}

}  // namespace qhopf
