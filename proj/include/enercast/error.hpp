#pragma once

#include <stdexcept>
#include <string>

namespace enercast {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Problems with the input data. The CLI maps these to exit status 3.
class DataError : public Error {
public:
    using Error::Error;
};

class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& what)
        : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ContinuityError : public DataError {
public:
    using DataError::DataError;
};

class ValidationError : public DataError {
public:
    using DataError::DataError;
};

class FeaturizeError : public DataError {
public:
    using DataError::DataError;
};

class ScenarioError : public DataError {
public:
    using DataError::DataError;
};

class ModelFormatError : public DataError {
public:
    using DataError::DataError;
};

// Caller-side contract violations on sizes and shapes.
class ShapeError : public Error {
public:
    using Error::Error;
};

class PairingError : public ShapeError {
public:
    using ShapeError::ShapeError;
};

class AlignmentError : public ShapeError {
public:
    using ShapeError::ShapeError;
};

// Numeric failures. The CLI maps these to exit status 4.
class NumericError : public Error {
public:
    using Error::Error;
};

class DomainError : public NumericError {
public:
    using NumericError::NumericError;
};

class TrainingDiverged : public NumericError {
public:
    TrainingDiverged(int epoch, const std::string& what)
        : NumericError("training diverged at epoch " + std::to_string(epoch) + ": " + what),
          epoch_(epoch) {}
    int epoch() const noexcept { return epoch_; }

private:
    int epoch_;
};

class FoldError : public NumericError {
public:
    FoldError(int fold, const std::string& what)
        : NumericError("fold " + std::to_string(fold) + ": " + what), fold_(fold) {}
    int fold() const noexcept { return fold_; }

private:
    int fold_;
};

// Bad configuration values. The CLI maps these to exit status 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

class PlanError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class GenerationError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class FitError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class AggregationError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

}  // namespace enercast
