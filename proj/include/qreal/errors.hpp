#ifndef QREAL_ERRORS_HPP
#define QREAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qreal {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Requested coefficients lie beyond what the operands determine.
class InsufficientPrecision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A q-real limit did not stabilize within the convergent budget.
class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A series that must have integer coefficients did not.
class IntegralityViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace qreal

#endif
