#pragma once

#include <stdexcept>
#include <string>

namespace mbd {

// Malformed user input: files, formulas, out-of-range parameters.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was asked to exceed its documented size guard.
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// A caller-guaranteed precondition turned out to be violated.  These indicate
// a bug in the caller or in this library, never bad user input.
struct PreconditionError : std::logic_error {
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mbd
