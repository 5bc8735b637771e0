#pragma once

#include <stdexcept>
#include <string>

namespace bayesmc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric argument lies outside the domain of the operation
/// (nonpositive Gamma argument, probability outside [0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two tables that must agree on order and alphabet size do not.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: alphabets, sequence files, HMM descriptions,
/// experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The requested closed form does not apply to this process
/// (e.g. entropy rate of a nondeterministic presentation).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace bayesmc
