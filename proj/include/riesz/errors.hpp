#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

// Thrown when an integral is provably or observably divergent. The message
// names the violated integrability constraint.
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when the quadrature tolerance could not be reached. Carries the best
// estimate obtained so the caller can still inspect it.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double best_estimate, double est_error)
      : std::runtime_error(what), best_estimate(best_estimate), est_error(est_error) {}
  double best_estimate;
  double est_error;
};

// Thrown when an operation requires a structural property the profile lacks
// (e.g. radial monotonicity for the weak norm).
class UnsupportedShapeError : public std::runtime_error {
 public:
  explicit UnsupportedShapeError(const std::string& what) : std::runtime_error(what) {}
};

// Bad sweep configuration or CLI input.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Report could not be written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace riesz
