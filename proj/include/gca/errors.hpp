#pragma once

#include <stdexcept>
#include <string>

namespace gca {

/// A named precondition of an operation does not hold for its input.
/// `name()` is a stable machine-readable tag such as "acyclic" or "coprime".
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

/// A computation was refused because its predicted size exceeds a caller budget.
class ResourceLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gca
