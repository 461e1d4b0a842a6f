#pragma once

#include <stdexcept>
#include <string>

namespace tranet {

// Error categories map 1:1 onto CLI exit codes:
//   ConfigError -> 1, DataError -> 2, NumericError -> 3.

// Invalid configuration or usage: bad parameter ranges, unknown options,
// inconsistent experiment setups.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data: parse failures, schema mismatches,
// missing labels.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numerical failure: non-convergent iteration, degenerate fit without a
// fallback path.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Power-law MLE cannot produce a finite exponent (all tail samples equal
// x_min). Callers that can fall back to the identity transform catch this
// specifically.
class DegenerateFitError : public NumericError {
public:
    using NumericError::NumericError;
};

} // namespace tranet
