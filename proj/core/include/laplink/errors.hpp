#pragma once

#include <stdexcept>
#include <string>

namespace laplink {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid input: malformed files, mismatched variable sets, unknown ids,
// violated move preconditions, exceeded size guards. Maps to CLI exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace laplink
