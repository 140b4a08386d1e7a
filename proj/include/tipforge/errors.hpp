#pragma once

#include <stdexcept>
#include <string>

namespace tipforge {

/// Base class for every error raised by the library. `kind()` is the stable
/// machine-readable name used in CLI error reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept = 0;
};

/// QR iteration did not deflate within its budget.
class ConvergenceFailure : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "ConvergenceFailure"; }
};

/// An operation that needs m_ii < 0 for every i got a diagonal entry >= 0.
class NonNegativeDiagonal : public Error {
public:
    NonNegativeDiagonal(int index, double value)
        : Error("diagonal entry " + std::to_string(index) + " is " + std::to_string(value) +
                "; strictly negative diagonal required"),
          index_(index) {}
    const char* kind() const noexcept override { return "NonNegativeDiagonal"; }
    int index() const noexcept { return index_; }

private:
    int index_;
};

class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("polynomial is identically zero") {}
    const char* kind() const noexcept override { return "ZeroPolynomial"; }
};

/// Exhaustive enumeration requested beyond the supported size.
class BudgetExceeded : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "BudgetExceeded"; }
};

/// Numerical grouping produced classes too close to tell apart.
class AuditFailure : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "AuditFailure"; }
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "DimensionMismatch"; }
};

/// Malformed text input. Row and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int row = 0, int column = 0)
        : Error(row > 0 ? what + " (row " + std::to_string(row) + ", column " +
                              std::to_string(column) + ")"
                        : what),
          row_(row),
          column_(column) {}
    const char* kind() const noexcept override { return "ParseError"; }
    int row() const noexcept { return row_; }
    int column() const noexcept { return column_; }

private:
    int row_;
    int column_;
};

}  // namespace tipforge
