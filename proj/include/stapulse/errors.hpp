#pragma once

#include <stdexcept>
#include <string>

namespace stapulse {

// Configuration / usage problems. CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failures. CLI maps these to exit code 3.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoBracketFound : NumericalError {
  explicit NoBracketFound(const std::string& msg) : NumericalError(msg) {}
};

struct OptimizerStalled : NumericalError {
  explicit OptimizerStalled(const std::string& msg) : NumericalError(msg) {}
};

struct PulseOverlap : NumericalError {
  explicit PulseOverlap(const std::string& msg) : NumericalError(msg) {}
};

struct StepTooLarge : NumericalError {
  explicit StepTooLarge(const std::string& msg) : NumericalError(msg) {}
};

} // namespace stapulse
