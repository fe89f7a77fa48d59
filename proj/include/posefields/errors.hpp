#pragma once

#include <stdexcept>
#include <string>

namespace posefields {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input document (annotation JSON, config file, ...).
struct ParseError : Error {
    using Error::Error;
};

/// Binary format violation; message names the byte offset where it was detected.
struct FormatError : Error {
    using Error::Error;
};

/// An id referenced by one record does not resolve to another record.
struct ReferenceError : Error {
    using Error::Error;
};

/// Invalid configuration value or inconsistent option combination.
struct ConfigError : Error {
    using Error::Error;
};

/// Tensor shape mismatch between operands.
struct DimensionError : Error {
    using Error::Error;
};

/// Filesystem / stream failure.
struct IoError : Error {
    using Error::Error;
};

/// Synthetic scene generation exhausted its rejection budget.
struct GenerationError : Error {
    using Error::Error;
};

/// Input exceeds a hard size limit (e.g. brute-force matching matrices).
struct SizeError : Error {
    using Error::Error;
};

} // namespace posefields
