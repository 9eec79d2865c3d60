#pragma once

#include <stdexcept>
#include <string>

namespace tlq {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic between elements of different field instances.
struct MixedFieldError : Error {
    explicit MixedFieldError(const std::string& what) : Error(what) {}
};

struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

// Evaluation of a rational function at a zero of its denominator.
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Instance data violating a construction constraint.
struct InvalidInstanceError : Error {
    explicit InvalidInstanceError(const std::string& what) : Error(what) {}
};

// A value that only exists in a larger scalar field than the current one.
struct FieldExtensionError : Error {
    explicit FieldExtensionError(const std::string& what) : Error(what) {}
};

// Size guards on exact computations.
struct GuardError : Error {
    explicit GuardError(const std::string& what) : Error(what) {}
};

}  // namespace tlq
