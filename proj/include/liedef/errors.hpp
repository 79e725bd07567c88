#pragma once

#include <stdexcept>
#include <string>

namespace liedef {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class DegreeOverflow : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A structure-constant table that fails the Jacobi identity where a Lie algebra is required.
class NotALieAlgebra : public Error {
public:
    using Error::Error;
};

class SingularBasisChange : public Error {
public:
    SingularBasisChange() : Error("basis change matrix is singular") {}
};

class NotACocycle : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

} // namespace liedef
