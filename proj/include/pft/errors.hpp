#pragma once

#include <stdexcept>

namespace pft {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct GridMismatch : Error {
  using Error::Error;
};
struct UnsupportedBackend : Error {
  using Error::Error;
};
struct IncommensurateWavevector : Error {
  using Error::Error;
};
struct EdgeLeakage : Error {
  using Error::Error;
};
struct IdentityMismatch : Error {
  using Error::Error;
};
struct ModeMismatch : Error {
  using Error::Error;
};
struct EmptyHistory : Error {
  using Error::Error;
};

}  // namespace pft
