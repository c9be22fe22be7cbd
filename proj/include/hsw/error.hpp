#pragma once

#include <stdexcept>
#include <string>

namespace hsw {

/// Base class for every error raised by the workbench library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A coefficient would mix parities (odd-even entry of an even map or product).
class ParityViolation : public Error {
public:
    using Error::Error;
};

/// Scalars from two different fields were combined.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class SingularMap : public Error {
public:
    using Error::Error;
};

class NotAMorphism : public Error {
public:
    using Error::Error;
};

class NotAnOOperator : public Error {
public:
    using Error::Error;
};

class NotSymplectic : public Error {
public:
    using Error::Error;
};

class UniverseTooLarge : public Error {
public:
    using Error::Error;
};

} // namespace hsw
