#pragma once

#include <stdexcept>
#include <string>

namespace zigzag {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact division left a nonzero remainder.
class NotDivisible : public Error {
public:
    using Error::Error;
};

class ZeroToNegativePower : public Error {
public:
    using Error::Error;
};

/// A bond lies outside the region where a weight scheme is defined.
class OutOfDomain : public Error {
public:
    using Error::Error;
};

/// An exhaustive oracle was asked for more objects than it is allowed to produce.
class OracleSizeError : public Error {
public:
    using Error::Error;
};

/// The normalizing partition function vanishes, so no probability measure exists.
class DegenerateEnsemble : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An identity that holds by construction came out false. Always a bug.
class InternalIdentityFailure : public Error {
public:
    using Error::Error;
};

} // namespace zigzag
