#ifndef ARWHIT_ERRORS_HPP
#define ARWHIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arwhit {

// Base class for all numerical-domain errors raised by this library.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument hit (or came numerically too close to) a pole of Gamma.
class PoleError : public NumericError {
public:
    explicit PoleError(const std::string& msg) : NumericError(msg) {}
};

// The series route for K_r / I_r requires a non-integer order.
class NonIntegerOrderRequired : public NumericError {
public:
    explicit NonIntegerOrderRequired(const std::string& msg) : NumericError(msg) {}
};

// Contour quadrature failed its self-consistency (tail-doubling) check.
class QuadratureNotConverged : public NumericError {
public:
    explicit QuadratureNotConverged(const std::string& msg) : NumericError(msg) {}
};

// Power-series parameters too close to a resonant configuration.
class ResonantParameters : public NumericError {
public:
    explicit ResonantParameters(const std::string& msg) : NumericError(msg) {}
};

// Series truncation did not reach the requested relative tail size.
class TruncationNotConverged : public NumericError {
public:
    explicit TruncationNotConverged(const std::string& msg) : NumericError(msg) {}
};

// Hypotheses of a verified identity (positivity constraints etc.) fail.
class ConstraintViolation : public NumericError {
public:
    explicit ConstraintViolation(const std::string& msg) : NumericError(msg) {}
};

// Operands defined over different base fields.
class FieldMismatch : public NumericError {
public:
    explicit FieldMismatch(const std::string& msg) : NumericError(msg) {}
};

// Re(s) too small for the radial integral to converge reliably.
class ConvergenceRangeError : public NumericError {
public:
    explicit ConvergenceRangeError(const std::string& msg) : NumericError(msg) {}
};

// Two supposedly equivalent internal expressions disagree.
class ExpressionMismatch : public NumericError {
public:
    explicit ExpressionMismatch(const std::string& msg) : NumericError(msg) {}
};

} // namespace arwhit

#endif
