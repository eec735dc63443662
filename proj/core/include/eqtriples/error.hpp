#pragma once

#include <stdexcept>

namespace eqtriples {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: cycle strings, group specs, element expressions,
// JSON payloads.
class parse_error : public error {
public:
  using error::error;
};

// Precondition violation: degree mismatch, element outside the group,
// subgroup relation that does not hold, invalid numeric parameter.
class domain_error : public error {
public:
  using error::error;
};

// A structural cap was exceeded (group order, degree, lattice size).
class resource_error : public error {
public:
  using error::error;
};

// "Cannot happen": an internal invariant failed.  Indicates a bug, not bad
// input.
class internal_error : public error {
public:
  using error::error;
};

} // namespace eqtriples
