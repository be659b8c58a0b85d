#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace permstat {

// Base of every error raised by the engine. The CLI maps the subclasses onto
// exit codes, so new failure modes should derive from the closest category.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid input (duplicate entries, bad constraint sets, ...).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

// Well-formed input outside the domain of the operation (support exceeds n).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured cap (Bell number, oracle group size) would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A structural identity the engine relies on did not hold. Seeing one of
// these means either a bug or a counterexample to the underlying theory.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A rational expectation was evaluated where its denominator vanishes.
class DegenerateEvaluation : public Error {
 public:
  using Error::Error;
};

// A limit was requested at a scale where the ratio diverges.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, const std::string& input)
      : Error("parse error at position " + std::to_string(position) + ": expected " +
              expected + " in \"" + input + "\""),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace permstat
