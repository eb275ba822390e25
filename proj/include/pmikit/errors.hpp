#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pmikit {

// Base of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad inputs: out-of-range values, malformed files, infeasible requests.
// The CLI maps this family to exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class SchemaError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// A column (or the target) is constant where variation is required.
class DegenerateError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class RankError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InsufficientDataError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Feature recipe does not match the data or stored statistics.
class RecipeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class GenerationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Data exists but does not cover the requested range or field.
// The CLI maps this family to exit code 3.
class CoverageError : public Error {
public:
    using Error::Error;
};

// Missing dates inside a requested range. Carries the gap so callers can
// report or fill it.
class GapError : public CoverageError {
public:
    GapError(const std::string& msg, std::vector<std::string> missing_dates)
        : CoverageError(msg), missing_dates_(std::move(missing_dates)) {}

    const std::vector<std::string>& missing_dates() const { return missing_dates_; }

private:
    std::vector<std::string> missing_dates_;
};

class MissingFieldError : public CoverageError {
public:
    using CoverageError::CoverageError;
};

}  // namespace pmikit
