#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace verlinde {

/// Raised when an operation's precondition fails. `parameter` names the
/// offending input so that frontends can report it in machine-readable form.
class PreconditionError : public std::invalid_argument {
public:
    PreconditionError(std::string parameter, const std::string& what)
        : std::invalid_argument(what), parameter_(std::move(parameter)) {}

    const std::string& parameter() const noexcept { return parameter_; }

private:
    std::string parameter_;
};

/// Raised when an internal consistency check fails (a bug, not bad input).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void check_invariant(bool ok, const std::string& what) {
    if (!ok) throw InvariantError(what);
}

}  // namespace verlinde
