#pragma once

#include <stdexcept>
#include <string>

namespace stormcast {

// Error categories mapped to process exit codes by the CLI.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

enum ExitCode {
    kExitOk = 0,
    kExitConfigError = 2,
    kExitDataError = 3,
    kExitModelError = 4,
};

} // namespace stormcast
