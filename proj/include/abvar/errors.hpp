#pragma once

#include <stdexcept>
#include <string>

namespace abvar {

/* Precondition violation: the caller asked for something outside the
 * domain of the operation (composite p, malformed discriminant, ...). */
class domain_error : public std::domain_error {
  public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/* A formula produced a non-integer where integrality is a theorem.
 * This is never rounded away; it signals a bug upstream. */
class integrality_error : public std::runtime_error {
  public:
    explicit integrality_error(const std::string& what) : std::runtime_error(what) {}
};

/* Two routes that must agree disagreed, or an internal structural check
 * (character system, cross-derivation) failed. Also a bug, never data. */
class internal_error : public std::runtime_error {
  public:
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace abvar
