#pragma once

#include <stdexcept>
#include <string>

namespace ncwave {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched sizes (samples vs weights, matrix shapes, signal vs group).
class DimensionError : public Error { using Error::Error; };

// Request outside supported range (Hermite/Bessel order caps, group dims).
class CapabilityError : public Error { using Error::Error; };

// Operation applied to a group kind it does not support.
class KindError : public Error { using Error::Error; };

// Invalid or incomplete configuration (missing axes, bad ranges, empty sweeps).
class ConfigError : public Error { using Error::Error; };

// Caller broke a documented precondition (e.g. transform data not derived
// from the signal being checked).
class PreconditionError : public Error { using Error::Error; };

// Window/base grid does not align with the signal grid.
class AlignmentError : public Error { using Error::Error; };

// Signal is identically zero (or numerically so) where a norm is required.
class DegenerateSignalError : public Error { using Error::Error; };

// Grid too coarse for the requested operation (e.g. difference stencils).
class ResolutionError : public Error { using Error::Error; };

// Numeric argument outside the mathematical domain (non-finite values, ...).
class DomainError : public Error { using Error::Error; };

// Malformed binary signal/field file.
class FormatError : public Error { using Error::Error; };

// A mathematically guaranteed inequality failed numerically (beyond slack).
class InequalityViolation : public Error { using Error::Error; };

} // namespace ncwave
