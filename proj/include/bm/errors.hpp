#pragma once

#include <stdexcept>
#include <string>

namespace bm {

// Error hierarchy. Everything thrown by this library derives from bm::Error,
// so callers can catch one type at the CLI boundary.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct NonConvergent : Error {
    using Error::Error;
};

struct TruncationTooShort : Error {
    using Error::Error;
};

struct ResidueObstruction : Error {
    using Error::Error;
};

struct DivergentMoment : Error {
    using Error::Error;
};

struct PrecisionTooLow : Error {
    using Error::Error;
};

struct ZeroOperator : Error {
    using Error::Error;
};

struct OddExponent : Error {
    using Error::Error;
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InternalCheckFailure : Error {
    using Error::Error;
};

} // namespace bm
