#pragma once

#include <stdexcept>
#include <string>

namespace pullback {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: files, literals, option values.
class InputError : public Error {
 public:
  using Error::Error;
};

// A structurally valid input that violates the hypotheses an operation needs
// (e.g. a portrait whose critical points are not all periodic).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

// Round-off produced a result that cannot happen mathematically.
class NumericalDegeneracy : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class CorruptFixedPoint : public Error {
 public:
  using Error::Error;
};

}  // namespace pullback
