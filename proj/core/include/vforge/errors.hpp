#pragma once

#include <stdexcept>
#include <string>

namespace vforge {

// Shared error taxonomy. Names match the failure modes of the module
// contracts; the CLI maps anything derived from Error to exit code 2/3.

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// gcd(a, m) > 1 when an inverse mod m was requested.
class NotInvertible : public Error {
public:
    using Error::Error;
};

// Input outside the supported desk-scale bounds.
class OutOfRange : public Error {
public:
    using Error::Error;
};

// Cyclotomic order or coefficient left the configured safe window.
// Arithmetic is checked: results are exact or this is thrown, never silent.
class OverflowPolicy : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class NotPrimitive : public Error {
public:
    using Error::Error;
};

class PoleError : public Error {
public:
    using Error::Error;
};

class OutOfDomain : public Error {
public:
    using Error::Error;
};

class ToleranceNotMet : public Error {
public:
    using Error::Error;
};

class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

class AccuracyNotCertified : public Error {
public:
    using Error::Error;
};

} // namespace vforge
