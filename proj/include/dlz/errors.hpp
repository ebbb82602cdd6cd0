#pragma once

#include <stdexcept>
#include <string>

namespace dlz {

// Bad arguments or out-of-contract inputs (q too small, non-primitive
// character where a primitive one is required, evaluation outside the
// supported region, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Evaluation requested exactly at a pole (Hurwitz zeta at s = 1).
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// The requested accuracy could not be reached within the configured caps.
// Carries the bound that was actually achieved.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double achieved_bound)
        : std::runtime_error(what), achieved(achieved_bound) {}
    double achieved;
};

// A path or contour passed through (or too close to) a zero of the target.
class PathThroughZeroError : public std::runtime_error {
public:
    PathThroughZeroError(const std::string& what, double sigma, double t)
        : std::runtime_error(what), sigma(sigma), t(t) {}
    double sigma;
    double t;
};

// A zero sits on (or too close to) a counting-rectangle boundary.
class BoundaryZeroError : public PathThroughZeroError {
public:
    using PathThroughZeroError::PathThroughZeroError;
};

// Store-level failures: resuming a scan with a different configuration.
class ConfigMismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Corrupted persistent data (bad JSONL line, invalid manifest).
class CorruptStoreError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dlz
