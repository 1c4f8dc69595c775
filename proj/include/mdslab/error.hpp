#pragma once

#include <stdexcept>
#include <string>

namespace mdslab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (slopes, fractions, point files, flags).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed input that violates an operation's precondition,
/// e.g. width >= 1 or weights that are not pairwise coprime.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Evaluation hit a zero denominator, e.g. a negative falling factorial.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Something that should be impossible: a cross-check disagreed.
class InternalError : public Error {
public:
    using Error::Error;
};

class ReconstructionError : public InternalError {
public:
    using InternalError::InternalError;
};

} // namespace mdslab
