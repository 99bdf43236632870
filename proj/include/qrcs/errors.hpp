#pragma once

#include <stdexcept>
#include <string>

namespace qrcs {

/// Base class for every error raised by the analyzer.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value failed validation. The message names the field and the violated constraint.
class ParameterError : public Error {
public:
    ParameterError(std::string field, std::string constraint)
        : Error(field + ": " + constraint), field_(std::move(field)), constraint_(std::move(constraint)) {}

    const std::string& field() const noexcept { return field_; }
    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string field_;
    std::string constraint_;
};

/// Argument lies outside the mathematical domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Mismatched vector lengths.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Empty or non-increasing sampling range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Input is structurally valid but carries nothing to compute on (e.g. a mesh without cells).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    IoError(std::string path, const std::string& what)
        : Error(path + ": " + what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace qrcs
