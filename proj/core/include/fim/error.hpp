#ifndef FIM_ERROR_HPP
#define FIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fim {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input token or line.
class FormatError : public Error {
public:
  using Error::Error;
};

// An item id or token that is not present in the dictionary.
class UnknownItemError : public Error {
public:
  using Error::Error;
};

// Input exceeds a documented tractability limit.
class CapacityError : public Error {
public:
  using Error::Error;
};

// A support threshold that resolves to zero or is otherwise unusable.
class ThresholdError : public Error {
public:
  using Error::Error;
};

// Invalid configuration value or combination.
class ConfigError : public Error {
public:
  using Error::Error;
};

// Stream or file read/write failure.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace fim

#endif  // FIM_ERROR_HPP
