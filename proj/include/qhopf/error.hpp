#pragma once

#include <stdexcept>
#include <string>

namespace qhopf {

enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    NotASubfield,
    NotCoprime,
    Parse,
    DimensionMismatch,
    SlotOutOfRange,
    OrderMismatch,
    AlgebraMismatch,
    MalformedInput,
    InternalInconsistency,
    ModulusUnavailable,
    DegenerateIntegralSpace,
    NoCointegral,
    NonUniqueCointegral,
    NoPivot,
    NoSolution,
    NonUnique,
    TheoremViolation,
    NoRMatrix,
    MissingOmegaHat,
    MissingRibbon,
    NotInAlphaZ,
    BadBeta,
    NotAHopfAlgebra,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `kind()` distinguishes input problems
/// from mathematical failures so the CLI can map them to exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for failures caused by malformed input rather than by a violated identity.
    bool is_input_error() const noexcept;

private:
    ErrorKind kind_;
};

}  // namespace qhopf
