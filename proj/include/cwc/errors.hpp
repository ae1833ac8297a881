#pragma once

#include <stdexcept>
#include <string>

namespace cwc {

/// Base class for recoverable data/parameter errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operand shape violations that indicate a programming bug (e.g. xor of
/// words with different lengths), not bad input data.
struct structural_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Result would exceed the fixed word-length cap.
struct capacity_error : error {
    using error::error;
};

/// Construction or decoding parameters are out of range / inconsistent.
struct parameter_error : error {
    using error::error;
};

/// Runtime validation failed (e.g. a feedback polynomial is not maximal).
struct validation_error : error {
    using error::error;
};

/// Malformed text input (codebook files, chain specs); message carries the
/// offending line or character position.
struct format_error : error {
    using error::error;
};

/// An exhaustive search would exceed its enforced budget. The search refuses
/// up front; no partial answer is ever produced.
struct budget_error : error {
    using error::error;
};

}  // namespace cwc
