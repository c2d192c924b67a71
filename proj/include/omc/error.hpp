#pragma once

#include <stdexcept>
#include <string>

namespace omc {

// Error categories map onto CLI exit codes: validation/domain/io -> 2,
// precondition/capability -> 3, resource -> 4.
enum class ErrorKind {
    domain,        // malformed argument (bad index, length mismatch, bad literal)
    validation,    // input data violates an axiom or a structural invariant
    precondition,  // operation precondition unmet (non-simple, acyclic, ...)
    capability,    // required optional data absent (no covectors, no realization)
    resource,      // configured cap exceeded
    io,            // file access / parse failure
    internal,      // broken internal invariant; indicates a bug
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace omc
