#ifndef GENTYPE_ERROR_HPP
#define GENTYPE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gentype {

enum class ErrorKind {
    CompositeModulus,
    ReducibleModulus,
    DivisionByZero,
    CtxMismatch,
    ZeroPolynomial,
    UnsupportedField,
    NonCoprimeModuli,
    NotAnExtension,
    NotSquare,
    SizeMismatch,
    NotIrreducible,
    NonSquarefreeDerivativeUnit,
    TooLarge,
    OddPermutation,
    ParseError,
    UnknownSuite,
    InvalidArgument,
    Internal,
};

inline const char* to_string(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::CompositeModulus: return "CompositeModulus";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::CtxMismatch: return "CtxMismatch";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::UnsupportedField: return "UnsupportedField";
        case ErrorKind::NonCoprimeModuli: return "NonCoprimeModuli";
        case ErrorKind::NotAnExtension: return "NotAnExtension";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::NonSquarefreeDerivativeUnit: return "NonSquarefreeDerivativeUnit";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::OddPermutation: return "OddPermutation";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownSuite: return "UnknownSuite";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace gentype

#endif  // GENTYPE_ERROR_HPP
