#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace beamlab {

/// LU factorization met a pivot too small to divide by.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(std::size_t pivot_index, double magnitude)
        : std::runtime_error("singular matrix: pivot " + std::to_string(pivot_index) +
                             " has magnitude " + std::to_string(magnitude)),
          pivot_index_(pivot_index) {}

    std::size_t pivot_index() const noexcept { return pivot_index_; }

private:
    std::size_t pivot_index_;
};

/// A coefficient violated a positivity requirement at a quadrature point.
class CoefficientError : public std::runtime_error {
public:
    CoefficientError(const std::string& name, double x, double value)
        : std::runtime_error("coefficient " + name + "(x) = " + std::to_string(value) +
                             " at x = " + std::to_string(x) + " violates positivity"),
          x_(x) {}

    double where() const noexcept { return x_; }

private:
    double x_;
};

/// Expression text could not be parsed. Carries the byte offset of the
/// failure and what the parser expected there.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& expected)
        : std::runtime_error("parse error at offset " + std::to_string(offset) +
                             ": expected " + expected),
          offset_(offset), expected_(expected) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

/// Expression evaluation failed (division by zero, sqrt of a negative).
/// Carries the source span [begin, end) of the offending subexpression.
class EvalError : public std::runtime_error {
public:
    EvalError(const std::string& what, std::size_t begin, std::size_t end)
        : std::runtime_error(what + " (source span [" + std::to_string(begin) + ", " +
                             std::to_string(end) + "))"),
          begin_(begin), end_(end) {}

    std::size_t span_begin() const noexcept { return begin_; }
    std::size_t span_end() const noexcept { return end_; }

private:
    std::size_t begin_, end_;
};

/// Run configuration is invalid (bad key, missing value, contradictory keys).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Manufactured data failed its strong-form residual check, which indicates
/// a mistake in the closed-form derivative algebra.
class ManufactureError : public std::runtime_error {
public:
    explicit ManufactureError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace beamlab
