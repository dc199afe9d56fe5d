#pragma once

#include <stdexcept>
#include <string>

namespace rydcav {

// Invalid or conflicting user configuration. `path` names the offending
// config field when one is known (e.g. "system.kappa_2pi_mhz").
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what, std::string path = {})
      : std::runtime_error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request the model deliberately does not support (dummy-state expansion, N > 3 oracle, ...).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A formula hit a vanishing denominator.
class SingularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Integration produced NaN/Inf.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, double time)
      : std::runtime_error(what + " at t = " + std::to_string(time) + " us"), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace rydcav
