#pragma once

#include <stdexcept>
#include <string>

namespace giftcount {

// A resource guard refused the requested computation (see guards.hpp).
// Enumerations either run to completion or refuse; they never truncate.
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// A call precondition was violated.
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// A recurrence's leading coefficient vanished inside the evaluation range.
class singularity_error : public std::runtime_error {
public:
    explicit singularity_error(const std::string& what) : std::runtime_error(what) {}
};

// An exact identity that must hold did not. This signals an implementation
// bug (or corrupted inputs), not a domain error.
class inconsistency_error : public std::logic_error {
public:
    explicit inconsistency_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace giftcount
