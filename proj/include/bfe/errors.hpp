#pragma once

#include <stdexcept>
#include <string>

namespace bfe {

/// Bad run configuration (unknown key, missing key, invalid value). CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Bayesian update annihilated the prior (total posterior mass below threshold).
/// The adaptive loop catches this and keeps the prior for that iteration.
class DegenerateUpdate : public std::runtime_error {
 public:
  explicit DegenerateUpdate(const std::string& what) : std::runtime_error(what) {}
};

/// regrid() target does not overlap the source interval (or holds no mass).
class RegridError : public std::runtime_error {
 public:
  explicit RegridError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested time budget cannot be met (e.g. T <= g*T_max when solving for the growth ratio).
class InfeasibleBudget : public std::runtime_error {
 public:
  explicit InfeasibleBudget(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bfe
