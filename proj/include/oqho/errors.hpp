#pragma once

#include <stdexcept>
#include <string>

namespace oqho {

// All toolkit failures derive from Error and carry a stable machine-readable
// name next to the human-readable message. The CLI maps ValidationError to
// exit code 1 and everything else to exit code 2.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what, std::string name = "validation_error")
        : Error(std::move(name), what) {}
};

class DimensionError : public ValidationError {
public:
    explicit DimensionError(const std::string& what) : ValidationError(what, "dimension_error") {}
};

class NumericError : public Error {
public:
    explicit NumericError(const std::string& what, std::string name = "numeric_error")
        : Error(std::move(name), what) {}
};

class StabilityError : public NumericError {
public:
    explicit StabilityError(const std::string& what, std::string name = "stability_error")
        : NumericError(what, std::move(name)) {}
};

class DefinitenessError : public NumericError {
public:
    explicit DefinitenessError(const std::string& what)
        : NumericError(what, "definiteness_error") {}
};

class DegeneracyError : public NumericError {
public:
    explicit DegeneracyError(const std::string& what) : NumericError(what, "degeneracy_error") {}
};

class ParameterError : public NumericError {
public:
    explicit ParameterError(const std::string& what) : NumericError(what, "parameter_error") {}
};

class HorizonError : public NumericError {
public:
    explicit HorizonError(const std::string& what) : NumericError(what, "horizon_error") {}
};

class InternalConsistencyError : public NumericError {
public:
    explicit InternalConsistencyError(const std::string& what)
        : NumericError(what, "internal_consistency_error") {}
};

}  // namespace oqho
