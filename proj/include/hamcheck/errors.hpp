#ifndef HAMCHECK_ERRORS_HPP
#define HAMCHECK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamcheck {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input-side errors (bad expressions, bad problem files, bad metrics).
class InputError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public InputError {
public:
    SyntaxError(const std::string& msg, std::size_t position)
        : InputError(msg + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class UnknownIdentifier : public InputError {
public:
    UnknownIdentifier(const std::string& name, std::size_t position)
        : InputError("unknown identifier '" + name + "' at position " +
                     std::to_string(position)),
          name_(name), position_(position) {}
    const std::string& name() const { return name_; }
    std::size_t position() const { return position_; }

private:
    std::string name_;
    std::size_t position_;
};

class NonIntegerExponent : public InputError {
public:
    explicit NonIntegerExponent(std::size_t position)
        : InputError("exponent must be an integer literal at position " +
                     std::to_string(position)) {}
};

class ZeroDenominator : public InputError {
public:
    ZeroDenominator() : InputError("division by an identically-zero denominator") {}
};

// A jet indeterminate appeared in a denominator (or with negative degree)
// where a jet-polynomial expression was required.
class NonPolynomialInJets : public Error {
public:
    explicit NonPolynomialInJets(const std::string& detail)
        : Error("expression is not polynomial in the jet variables: " + detail) {}
};

class DegenerateMetric : public InputError {
public:
    DegenerateMetric() : InputError("metric determinant is identically zero") {}
};

class AsymmetricMetric : public InputError {
public:
    explicit AsymmetricMetric(const std::string& detail)
        : InputError("metric is not symmetric: " + detail) {}
};

class NonConstantMetric : public InputError {
public:
    explicit NonConstantMetric(const std::string& detail)
        : InputError("metric must be constant: " + detail) {}
};

class GammaMismatch : public InputError {
public:
    explicit GammaMismatch(const std::string& detail)
        : InputError("supplied connection does not match the Levi-Civita one: " +
                     detail) {}
};

class DimensionMismatch : public InputError {
public:
    explicit DimensionMismatch(const std::string& detail)
        : InputError("dimension mismatch: " + detail) {}
};

}  // namespace hamcheck

#endif
