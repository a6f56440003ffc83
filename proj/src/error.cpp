#include "hbch/error.hpp"

namespace hbch {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::NonPrime: return "NonPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::NonPrimitiveModulus: return "NonPrimitiveModulus";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NotADivisor: return "NotADivisor";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::NotCosetClosed: return "NotCosetClosed";
        case Errc::Exhausted: return "Exhausted";
        case Errc::LambdaTooLarge: return "LambdaTooLarge";
        case Errc::AlphabetMismatch: return "AlphabetMismatch";
        case Errc::BadRange: return "BadRange";
        case Errc::NonSquareAlphabet: return "NonSquareAlphabet";
        case Errc::TooLarge: return "TooLarge";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::NoSolution: return "NoSolution";
        case Errc::ExcludedCase: return "ExcludedCase";
        case Errc::AmbiguousCase: return "AmbiguousCase";
        case Errc::NotSelfOrthogonal: return "NotSelfOrthogonal";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::BoundExceeded: return "BoundExceeded";
        case Errc::ParseError: return "ParseError";
        case Errc::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string &message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace hbch
