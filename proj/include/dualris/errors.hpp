#pragma once

#include <stdexcept>
#include <string>

namespace dualris {

// Invalid configuration values or malformed config text. key() names the
// offending setting when one is known.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what, std::string key = {})
        : std::invalid_argument(what), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

// Argument outside the mathematical domain of a function (non-positive
// distance, E1 at x <= 0, a rule of the wrong kind, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A numerical procedure failed to meet its tolerance. Carries the best
// estimate reached so callers can report it.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double best_estimate, double error_estimate)
        : std::runtime_error(what), best_(best_estimate), err_(error_estimate) {}
    double best_estimate() const noexcept { return best_; }
    double error_estimate() const noexcept { return err_; }

private:
    double best_;
    double err_;
};

}  // namespace dualris
