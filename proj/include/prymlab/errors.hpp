#pragma once

#include <stdexcept>
#include <string>

namespace prymlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct DegenerateCurve : Error {
    DegenerateCurve() : Error("discriminant vanishes") {}
    explicit DegenerateCurve(const std::string& what) : Error(what) {}
};

struct DegenerateParameters : DegenerateCurve {
    explicit DegenerateParameters(const std::string& what) : DegenerateCurve(what) {}
};

struct NotACube : Error {
    using Error::Error;
};

struct CMNotSupported : Error {
    using Error::Error;
};

struct UnknownFamily : Error {
    using Error::Error;
};

// Raised when an assembled structure contradicts the classification constraints.
struct InternalInconsistency : Error {
    using Error::Error;
};

struct BadPrime : Error {
    using Error::Error;
};

struct PrimeCapExceeded : Error {
    using Error::Error;
};

struct WeilBoundViolation : Error {
    using Error::Error;
};

struct NonExactDivision : Error {
    using Error::Error;
};

} // namespace prymlab
