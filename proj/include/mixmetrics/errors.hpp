#pragma once

#include <stdexcept>
#include <string>

namespace mixmetrics {

// Root of the library's error hierarchy. Every failure the library can
// report is a subclass, so callers may catch Error to handle anything,
// or a specific subclass to branch on the cause.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A partition, profile, or observation was constructed with no parts at all.
class EmptyInput : public Error {
public:
    using Error::Error;
};

// A count that must be a positive integer was zero or negative.
class NonPositiveEntry : public Error {
public:
    using Error::Error;
};

// Sender and receiver totals of a round disagree; no assignment exists.
class UnbalancedRound : public Error {
public:
    using Error::Error;
};

// An enumeration would exceed its configured size budget. The message
// names the budget and the size that tripped it.
class SizeBudgetExceeded : public Error {
public:
    using Error::Error;
};

// Two polynomials over different variable sets were combined.
class VariableCountMismatch : public Error {
public:
    using Error::Error;
};

// A compatibility matrix admits no perfect matching (permanent is zero),
// so its anonymity degree is undefined rather than zero.
class NoMatching : public Error {
public:
    using Error::Error;
};

// A probability vector had a negative entry or did not sum to one.
class NotADistribution : public Error {
public:
    using Error::Error;
};

// A metric's normalizer is undefined for the given size (e.g. log of
// the user count when there are fewer than two users).
class DegenerateSystem : public Error {
public:
    using Error::Error;
};

// Malformed textual input (profile spec string or round-log CSV). The
// message carries the offending token and, for files, the line number.
class ParseError : public Error {
public:
    using Error::Error;
};

// An experiment name did not match any built-in series.
class UnknownExperiment : public Error {
public:
    using Error::Error;
};

// A file could not be opened, read, or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace mixmetrics
