#pragma once

#include <stdexcept>
#include <string>

namespace hinv {

// Malformed user data: bad words, undeclared generators, invalid tables.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation asked of a G kind it does not handle (e.g. coset enumeration over a pc group).
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inputs individually fine but incompatible with each other (e.g. two different G).
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A postcondition that should hold by construction failed.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void check_internal(bool ok, const std::string &what) {
  if (!ok)
    throw InternalError(what);
}

} // namespace hinv
