#pragma once

#include <stdexcept>
#include <string>

namespace jensenlab {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation
// (division by an interval containing zero, log of a non-positive
// interval, sector parameter out of range, ...).
struct DomainError : Error {
    using Error::Error;
};

// A radius could not be kept finite at the requested precision.
struct PrecisionExhausted : Error {
    using Error::Error;
};

// Evaluation at (or too near) a pole of Gamma or zeta.
struct PoleError : Error {
    using Error::Error;
};

// A jet does not hold enough derivatives for the requested operation.
struct JetTooShort : Error {
    using Error::Error;
};

// Jet not flagged even, or an odd entry fails to enclose zero.
struct ParityError : Error {
    using Error::Error;
};

// Reversal degree smaller than the polynomial degree.
struct DegreeError : Error {
    using Error::Error;
};

// Leading ball coefficient straddles zero; the degree is not certifiable.
struct AmbiguousDegree : Error {
    using Error::Error;
};

// A trial configuration violates a theorem hypothesis.
struct HypothesisViolation : Error {
    using Error::Error;
};

// The two independent xi jet methods produced disjoint enclosures.
struct MethodDisagreement : Error {
    using Error::Error;
};

// Quadrature could not reach the requested accuracy within its caps.
struct QuadratureTooCoarse : Error {
    using Error::Error;
};

// A jet lacks the coefficient-decay envelope a truncation scan needs.
struct TailBoundUnavailable : Error {
    using Error::Error;
};

// Malformed or mismatched coefficient cache file.
struct CacheError : Error {
    using Error::Error;
};

// Bad CLI flags or config file.
struct UsageError : Error {
    using Error::Error;
};

}  // namespace jensenlab
