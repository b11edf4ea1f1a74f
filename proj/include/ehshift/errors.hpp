#ifndef EHSHIFT_ERRORS_HPP
#define EHSHIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ehshift {

// Size or resource guard tripped (too many vertices, colorings, tower
// overflow, ...). Maps to CLI exit code 3.
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Exact search ran out of its node budget. Never a wrong answer.
struct budget_exhausted : guard_error {
    explicit budget_exhausted(const std::string& what) : guard_error(what) {}
};

// A certified result failed re-verification. Signals an implementation
// bug, never an expected condition.
struct verification_bug : std::logic_error {
    explicit verification_bug(const std::string& what) : std::logic_error(what) {}
};

} // namespace ehshift

#endif
