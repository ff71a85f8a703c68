#pragma once

#include <stdexcept>
#include <string>

namespace hybridcov {

/// Invalid or unparseable configuration. `key` names the offending field,
/// `line` is the 1-based source line when the error comes from a file (0 otherwise).
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& key, const std::string& message, int line = 0)
        : std::runtime_error(format(key, message, line)), key_(key), line_(line) {}

    const std::string& key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

private:
    static std::string format(const std::string& key, const std::string& message, int line) {
        std::string out;
        if (line > 0) out += "line " + std::to_string(line) + ": ";
        if (!key.empty()) out += key + ": ";
        return out + message;
    }

    std::string key_;
    int line_;
};

/// A numerical procedure failed to reach its tolerance.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& message, double best_estimate, double error_bound)
        : std::runtime_error(message), estimate_(best_estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

/// A design target cannot be met; `supremum` is the best achievable value.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string& message, double supremum)
        : std::runtime_error(message), supremum_(supremum) {}

    double supremum() const noexcept { return supremum_; }

private:
    double supremum_;
};

}  // namespace hybridcov
