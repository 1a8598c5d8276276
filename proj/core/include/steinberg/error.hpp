#pragma once

#include <stdexcept>
#include <string>

namespace steinberg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed ring spec, root-system name, element literal or config.
struct SpecError : Error {
  using Error::Error;
};

/// The requested construction exists mathematically but is not implemented
/// for this ring class (e.g. matrices for E-type systems).
struct UnsupportedError : Error {
  using Error::Error;
};

/// A precondition on the mathematical input failed (u^t v != 0, alpha+beta
/// not a root, mismatched rings, ...).
struct DomainError : Error {
  using Error::Error;
};

struct DivisibilityError : Error {
  using Error::Error;
};

/// A search or enumeration ran into its cap. Never means "false".
struct InconclusiveError : Error {
  using Error::Error;
};

}  // namespace steinberg
