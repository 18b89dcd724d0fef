#pragma once

#include <stdexcept>
#include <string>

namespace qbsim {

// Bad user input: malformed config, out-of-range parameters. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure during a run (norm drift, failed tuning). CLI exit code 3.
class NumericsError : public std::runtime_error {
public:
    explicit NumericsError(const std::string& msg) : std::runtime_error(msg) {}
};

// A basis label referenced a photon number beyond the truncation.
class TruncationError : public ConfigError {
public:
    explicit TruncationError(const std::string& msg) : ConfigError(msg) {}
};

} // namespace qbsim
