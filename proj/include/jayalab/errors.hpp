#pragma once

#include <stdexcept>
#include <string>

namespace jayalab {

// Invalid user-supplied configuration (population size, bounds, flags).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// A caller broke a documented precondition.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// Unknown name in a catalog or table lookup.
class LookupError : public std::out_of_range {
public:
    explicit LookupError(const std::string& what) : std::out_of_range(what) {}
};

// Numerical routine failed to meet its tolerance.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

#define JAYALAB_EXPECTS(cond, msg)                                   \
    do {                                                             \
        if (!(cond)) throw ::jayalab::ContractViolation(msg);        \
    } while (false)

} // namespace jayalab
