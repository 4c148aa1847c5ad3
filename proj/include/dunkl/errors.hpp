#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

// Invalid configuration: mismatched sizes, negative multiplicities, bad specs.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedDimension : public ConfigError {
public:
    using ConfigError::ConfigError;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed user input (duplicate points, negative densities, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotInCatalog : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A certification step that requires an earlier certificate to pass.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dunkl
