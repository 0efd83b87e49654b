#pragma once

#include <stdexcept>
#include <string>

namespace gaugelens {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Dimension or shape mismatch between operands.
struct ShapeError : Error {
    explicit ShapeError(const std::string& msg) : Error(msg) {}
};

// Argument outside the operation's domain (bad counts, kappa < 1,
// non-symmetric input, non-PSD matrix, degenerate vectors, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Numerical failure at runtime: divergence, non-convergence, NaN.
struct NumericError : Error {
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

// Malformed config, CSV, or checkpoint input.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Filesystem trouble, reported with the offending path.
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// A gauge transform changed model predictions; the experiment premise
// is violated and the run must abort.
struct InvarianceError : Error {
    explicit InvarianceError(const std::string& msg) : Error(msg) {}
};

} // namespace gaugelens
