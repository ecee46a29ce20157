#pragma once

#include <stdexcept>
#include <string>

namespace hypsum {

/// Base class for every error this library raises deliberately.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A denominator Pochhammer symbol (or a closed-form denominator) vanished
/// inside the range a computation needed. Degeneracy is always an explicit
/// error, never a silent zero or infinity.
class DegenerateParameter : public Error {
public:
    explicit DegenerateParameter(const std::string& what) : Error(what) {}

    DegenerateParameter(const std::string& parameter, const std::string& value, long index)
        : Error("degenerate parameter " + parameter + " = " + value +
                " (Pochhammer factor vanishes at index " + std::to_string(index) + ")"),
          parameter_(parameter),
          index_(index) {}

    const std::string& parameter() const noexcept { return parameter_; }
    long index() const noexcept { return index_; }

private:
    std::string parameter_;
    long index_ = -1;
};

/// Arithmetic between truncated series of unequal order.
class OrderMismatch : public Error {
public:
    OrderMismatch(std::size_t lhs, std::size_t rhs)
        : Error("series order mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// A side condition stated with an identity (e.g. a != f_j) was violated.
class ProvisoViolated : public Error {
public:
    using Error::Error;
};

/// A fuzz instance could not be generated without degeneracy within the
/// resample cap. Reported, never silently skipped.
class ResampleCapExceeded : public Error {
public:
    ResampleCapExceeded(std::size_t instance, unsigned cap)
        : Error("instance " + std::to_string(instance) + ": resample cap of " +
                std::to_string(cap) + " exceeded while rejecting degenerate parameters") {}
};

}  // namespace hypsum
