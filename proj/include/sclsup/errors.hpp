#ifndef SCLSUP_ERRORS_HPP
#define SCLSUP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sclsup {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: surface syntax, file schemas, bad arguments. CLI exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A configurable budget (state cap, enumeration budget) was exceeded. CLI exit code 2.
class ResourceError : public Error {
public:
    using Error::Error;
};

// The specification cannot be enforced from the initial state. CLI exit code 3.
class UnenforceableError : public Error {
public:
    using Error::Error;
};

// The closed loop violated the supervision protocol at run time. CLI exit code 4.
class ProtocolError : public Error {
public:
    using Error::Error;
};

// Plant executed an event outside the issued control pattern.
class IllegalObservationError : public ProtocolError {
public:
    using ProtocolError::ProtocolError;
};

// Plant executed an event with no defined transition.
class UndefinedTransitionError : public ProtocolError {
public:
    using ProtocolError::ProtocolError;
};

// A simulation ran past its step cap; valid inputs never do.
class MaxStepsError : public ProtocolError {
public:
    using ProtocolError::ProtocolError;
};

} // namespace sclsup

#endif
