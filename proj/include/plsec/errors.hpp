#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace plsec {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A model parameter violates its invariant. `field()` names the offender.
class InvalidParameter : public std::invalid_argument {
public:
    InvalidParameter(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Adaptive quadrature or iteration gave up before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double partial, double error_estimate)
        : std::runtime_error(what), partial_(partial), error_(error_estimate) {}

    double partial() const noexcept { return partial_; }
    double error_estimate() const noexcept { return error_; }

private:
    double partial_;
    double error_;
};

/// Root bracket whose end points do not straddle a sign change.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace plsec
