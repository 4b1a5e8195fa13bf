#pragma once

#include <stdexcept>
#include <string>

namespace drcl {

// Every failure surfaced by the library derives from Error; the concrete
// class says whose fault it is (bad config, bad data, bad file, numerical
// blow-up, or a library bug).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class DataError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

// Malformed external files: IDX datasets, checkpoints, CSV matrices.
class FormatError : public Error {
public:
    using Error::Error;
};

class StateError : public Error {
public:
    using Error::Error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

// DRS residual exploded past the guard; message names the iteration.
class DivergenceError : public Error {
public:
    using Error::Error;
};

// Checkpoint load failures are kept distinct so callers can tell a stale
// format from a corrupted payload from a short read.
class CheckpointVersionError : public FormatError {
public:
    using FormatError::FormatError;
};

class CheckpointHashError : public FormatError {
public:
    using FormatError::FormatError;
};

class CheckpointTruncationError : public FormatError {
public:
    using FormatError::FormatError;
};

} // namespace drcl
