#pragma once

#include <stdexcept>
#include <string>

namespace qftlm {

/// Invalid or inconsistent experiment configuration. The CLI maps this to
/// exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Unrecoverable numerical failure (empty truncated subspace, singular Gram
/// matrix at eta = 0). The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qftlm
