#pragma once

#include <stdexcept>
#include <string>

namespace grouptrix {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad construction descriptor, unparsable file, violated precondition.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// A size guard refused the workload (order, vertex count, result count).
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

class NotNormalError : public Error {
 public:
  using Error::Error;
};

/// A certificate could neither prove nor refute the claim.
class IndeterminateError : public Error {
 public:
  using Error::Error;
};

}  // namespace grouptrix
