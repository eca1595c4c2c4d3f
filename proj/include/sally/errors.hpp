#ifndef SALLY_ERRORS_HPP
#define SALLY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sally {

/// Inconsistent inputs: mismatched rings, wrong exponent-vector length,
/// a containment that was required but does not hold.
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The ideal has infinite colength where a finite one is required.
class NotPrimaryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Q could not be certified as a reduction of I within the cap.
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The Hilbert polynomial could not be fitted on the available window.
class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative procedure (e.g. the Ratliff-Rush chain) did not stabilize.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column),
          message_(std::move(message)) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

}  // namespace sally

#endif  // SALLY_ERRORS_HPP
