#pragma once

#include <stdexcept>
#include <string>

namespace fiscsim {

// A precondition or parameter invariant was violated. The message names the
// offending field so config-driven callers can point at the bad key.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An iterative solver failed to locate or refine a root. The message carries
// the solver's diagnostics (bracket endpoints, iteration count, last residual).
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// The config document is malformed, has unknown keys, or breaks an invariant.
// The message includes the dotted path to the offending key where applicable.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fiscsim
