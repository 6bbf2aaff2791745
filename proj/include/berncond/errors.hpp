#pragma once

#include <stdexcept>
#include <string>

namespace berncond {

// CLI exit codes. Library code throws the exceptions below; the CLI maps
// them to these codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfigError = 2,
    kExitInfeasible = 3,
    kExitSizeLimit = 4,
};

// Malformed input: bad parameters, schema violations, unknown JSON keys.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically impossible request: zero-probability conditioning event,
// infeasible center system, undefined constants (b = 0).
class InfeasibleError : public std::runtime_error {
  public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a configured size limit (e.g. max-flow edge budget).
class SizeLimitError : public std::runtime_error {
  public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace berncond
