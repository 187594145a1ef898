#pragma once

#include <stdexcept>
#include <string>

namespace bfc {

/// Base for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input or violated precondition.
struct InputError : Error {
  using Error::Error;
};

/// Request exceeds a documented size limit.
struct CapabilityError : Error {
  using Error::Error;
};

}  // namespace bfc
