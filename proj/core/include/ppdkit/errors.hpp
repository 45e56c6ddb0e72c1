#pragma once

#include <stdexcept>
#include <string>

namespace ppdkit {

// Violation of a documented modeling contract, e.g. requesting the
// discriminative posterior for multiple observations of one label.
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid experiment or sampler configuration (unknown key, bad value,
// unreadable file).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A conditional update hit a numerically singular covariance. The Gibbs
// engine treats this as a rejected step and resamples.
class SingularStepError : public std::runtime_error {
 public:
  explicit SingularStepError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace ppdkit
