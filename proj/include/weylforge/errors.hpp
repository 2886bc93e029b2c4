#ifndef WEYLFORGE_ERRORS_HPP
#define WEYLFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weylforge {

// Malformed input: non-finite values, bad JSON shapes, bad option values.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical precondition does not hold (e.g. the pair does not interlace).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Floating point breakdown inside a construction or the eigensolver.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

} // namespace weylforge

#endif
