#ifndef CUBOID_ERRORS_HPP
#define CUBOID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cuboid {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct MissingVariable : Error {
    using Error::Error;
};
struct NotUnivariate : Error {
    using Error::Error;
};
struct ZeroPolynomial : Error {
    using Error::Error;
};
struct NotARoot : Error {
    using Error::Error;
};
struct WrongDegree : Error {
    using Error::Error;
};
struct DenominatorVanishes : Error {
    using Error::Error;
};
struct DegenerateParameters : Error {
    using Error::Error;
};
struct ExceptionalC : Error {
    using Error::Error;
};
struct ZeroC : Error {
    using Error::Error;
};
struct NotOnVariety : Error {
    using Error::Error;
};
struct NotOnCurve : Error {
    using Error::Error;
};
struct ExceptionalPoint : Error {
    using Error::Error;
};

} // namespace cuboid

#endif
