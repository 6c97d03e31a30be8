#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cfcalc {

enum class ErrorCode {
    DuplicateVertexInSimplex,
    EmptySimplex,
    SimplexNotInComplex,
    AmbientMismatch,
    IntegerOverflow,
    NotEuler,
    SetNotClosed,
    SetNotClosable,
    DimensionTooHigh,
    SkeletonNotEuler,
    HalfNotIntegral,
    NotSimplicial,
    ValidationError,
    ParseError,
    UnknownFixture,
    UsageError,
    // Two independent evaluation routes disagreed. Always a bug, never bad input.
    FormulaDisagreement,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DuplicateVertexInSimplex: return "DuplicateVertexInSimplex";
    case ErrorCode::EmptySimplex: return "EmptySimplex";
    case ErrorCode::SimplexNotInComplex: return "SimplexNotInComplex";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::IntegerOverflow: return "IntegerOverflow";
    case ErrorCode::NotEuler: return "NotEuler";
    case ErrorCode::SetNotClosed: return "SetNotClosed";
    case ErrorCode::SetNotClosable: return "SetNotClosable";
    case ErrorCode::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorCode::SkeletonNotEuler: return "SkeletonNotEuler";
    case ErrorCode::HalfNotIntegral: return "HalfNotIntegral";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::FormulaDisagreement: return "FormulaDisagreement";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    bool is_consistency_failure() const noexcept {
        return code_ == ErrorCode::FormulaDisagreement;
    }

private:
    ErrorCode code_;
};

/// Raised when an odd value blocks halving (or when a skeleton fails the Euler
/// test). Carries the first offending simplex in canonical order.
class NotEulerError : public Error {
public:
    NotEulerError(ErrorCode code, std::string witness, std::int64_t value, const std::string& context)
        : Error(code, context + " is not Euler: odd value " + std::to_string(value) + " at " + witness),
          witness_(std::move(witness)), value_(value) {}

    const std::string& witness() const noexcept { return witness_; }
    std::int64_t value() const noexcept { return value_; }

private:
    std::string witness_;
    std::int64_t value_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error(ErrorCode::ParseError,
                (line > 0 ? "line " + std::to_string(line) + ": " : std::string{}) + reason),
          line_(line), reason_(reason) {}

    /// 1-based; 0 when the problem is not attributable to a single line.
    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorCode::IntegerOverflow, std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(ErrorCode::IntegerOverflow, std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorCode::IntegerOverflow, std::to_string(a) + " * " + std::to_string(b));
    return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

// (-1)^d * a
inline std::int64_t signed_by_dim(int d, std::int64_t a) { return (d % 2 == 0) ? a : neg(a); }

} // namespace checked

} // namespace cfcalc
