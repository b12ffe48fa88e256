#pragma once

#include <stdexcept>
#include <string>

namespace legdet {

// Base class for every error raised by the library. Each subclass corresponds
// to one precondition that callers can violate.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotOddPrime : public Error {
public:
    explicit NotOddPrime(long long n)
        : Error(std::to_string(n) + " is not an odd prime"), value(n) {}
    long long value;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class WrongResidueClass : public Error {
public:
    using Error::Error;
};

class UncoveredPrime : public Error {
public:
    using Error::Error;
};

class HypothesisViolated : public Error {
public:
    using Error::Error;
};

class BoundExceeded : public Error {
public:
    using Error::Error;
};

class ModulusMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace legdet
