#pragma once

#include <stdexcept>
#include <string>

namespace pcmci_omega {

// Caller passed arguments outside an operation's contract.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed or unusable input data (CSV, JSON, non-finite cells).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Not enough samples left for a partition or a CI test.
class InsufficientDataError : public DataError {
public:
    using DataError::DataError;
};

// A structural causal model spec that violates its own invariants.
class SpecValidationError : public DataError {
public:
    using DataError::DataError;
};

// Simulation diverged on every retry.
class StabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pcmci_omega
