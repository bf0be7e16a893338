#pragma once

#include <stdexcept>
#include <string>

namespace dualcoh {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input to a constructor: empty generator list, wrong parity,
// degree-0 relation, ...
class InvalidPresentation : public Error {
public:
    using Error::Error;
};

// A presentation whose quotient does not match the declared top degree.
class InconsistentPresentation : public Error {
public:
    using Error::Error;
};

// Family parameters outside the accepted range (bad partition, rank too small).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

// Monomial cap exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Elements from different algebras, or degrees that do not fit the operation.
class UsageMismatch : public Error {
public:
    using Error::Error;
};

class RelationViolation : public Error {
public:
    using Error::Error;
};

// An exact linear system that should be solvable was not (wrong morphism or
// presentation).
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace dualcoh
