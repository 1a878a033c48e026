#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dfee {

/// Every failure the engine reports carries one of these kinds. The CLI maps
/// them onto its exit-code contract.
enum class ErrorKind {
    DivisionByZero,
    Overflow,
    SyntaxError,
    NonAffineArgument,
    AlphaInExponent,
    AlphaNotAllowed,
    InvalidFuzzyResult,
    InvalidFuzzyInput,
    NonSeparableDenominator,
    ImproperRational,
    UnsnappableRoot,
    MixedVariable,
    ArityMismatch,
    ZeroDenominator,
    ResidualImaginaryPart,
    NonDecayingIntegrand,
    ValidationFailed,
    Schema,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

    ErrorKind kind() const noexcept { return kind_; }
    /// The message without the kind prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

/// Parse failures remember where they happened.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error(ErrorKind::SyntaxError, what + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// True for the errors that mean "the problem has no closed form in the
/// exponential-polynomial class".
inline bool is_not_solvable(ErrorKind kind) {
    return kind == ErrorKind::NonSeparableDenominator || kind == ErrorKind::UnsnappableRoot ||
           kind == ErrorKind::ImproperRational;
}

}  // namespace dfee
