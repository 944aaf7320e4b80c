#pragma once

#include <stdexcept>
#include <string>

namespace ssbid {

struct MarginalPrice : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UpperBoundTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NegativeWeight : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoFacetFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicateHyperplane : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OnHyperplane : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CellOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionUnmet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ssbid
