#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invmeans {

/// Base for every error raised by the library.
class MeanError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unknown identifier or malformed configuration text.
class ConfigError : public MeanError {
public:
    using MeanError::MeanError;
};

/// Malformed mean-spec text; `position()` is the 0-based offset of the fault.
class ParseError : public ConfigError {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A numeric parameter (t, r, s, p, ...) outside the admissible range.
class ParameterError : public MeanError {
public:
    using MeanError::MeanError;
};

/// An operation applied to a mean lacking a required property.
class DomainError : public MeanError {
public:
    using MeanError::MeanError;
};

/// Argument outside the representable range of an evaluator.
class RangeError : public MeanError {
public:
    using MeanError::MeanError;
};

} // namespace invmeans
