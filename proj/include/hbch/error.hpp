#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hbch {

enum class Errc {
    InvalidArgument,
    NonPrime,
    ReducibleModulus,
    NonPrimitiveModulus,
    FieldTooLarge,
    DivisionByZero,
    NotADivisor,
    NotCoprime,
    IndexOutOfRange,
    NotCosetClosed,
    Exhausted,
    LambdaTooLarge,
    AlphabetMismatch,
    BadRange,
    NonSquareAlphabet,
    TooLarge,
    BudgetExceeded,
    NoSolution,
    ExcludedCase,
    AmbiguousCase,
    NotSelfOrthogonal,
    PreconditionViolated,
    BoundExceeded,
    ParseError,
    InternalInvariant,
};

std::string_view errc_name(Errc code);

/// Errors that can only be raised by a bug in this library, never by bad input.
constexpr bool is_internal(Errc code) {
    return code == Errc::NotCosetClosed || code == Errc::NoSolution || code == Errc::InternalInvariant;
}

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string &message);

    Errc code() const noexcept {
        return code_;
    }

   private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string &message);

}  // namespace hbch
