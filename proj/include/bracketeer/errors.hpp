#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace bracketeer {

// Byte range [begin, end) into the original input text.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

enum class ErrorCode {
    // parser
    SyntaxError,
    UnsupportedAtom,
    MultipleVariables,
    UnsupportedStructure,
    // expansion / engine
    IndexCollision,
    FewerThanTwoTerms,
    NegativeIndex,
    EmptyList,
    NoSolutions,
    UnboundParameter,
    NoConvergentSolution,
    // pochhammer / numeric
    NegativeIntegerBase,
    PochDomain,
    PoleAt,
    DidNotConverge,
    DivergentTerm,
    OracleFailed,
    InvalidArgument,
};

// Process exit categories used by the CLI.
enum class ExitCategory { Ok = 0, VerifyFail = 1, InputError = 2, NoConvergent = 3, NumericFailure = 4 };

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string message, std::optional<SourceSpan> span = std::nullopt)
        : std::runtime_error(std::move(message)), code_(code), span_(span) {}

    ErrorCode code() const { return code_; }
    const std::optional<SourceSpan>& span() const { return span_; }

    ExitCategory exit_category() const {
        switch (code_) {
            case ErrorCode::SyntaxError:
            case ErrorCode::UnsupportedAtom:
            case ErrorCode::MultipleVariables:
            case ErrorCode::UnsupportedStructure:
            case ErrorCode::UnboundParameter:
            case ErrorCode::InvalidArgument:
                return ExitCategory::InputError;
            case ErrorCode::NoConvergentSolution:
            case ErrorCode::NoSolutions:
                return ExitCategory::NoConvergent;
            default:
                return ExitCategory::NumericFailure;
        }
    }

  private:
    ErrorCode code_;
    std::optional<SourceSpan> span_;
};

const char* error_code_name(ErrorCode code);

}  // namespace bracketeer
