#pragma once

#include <stdexcept>
#include <string>

namespace huipm {

// Malformed input or a violated precondition on user data.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Caller misuse: bad arguments to an operation (k < 1, |L| > k, ...).
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace huipm
