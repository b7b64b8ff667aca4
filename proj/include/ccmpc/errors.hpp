#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccmpc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list input. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Internal invariant broken; always a bug in this library.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Strict-mode receive budget exceeded.
class SpaceViolation : public Error {
 public:
  SpaceViolation(std::size_t round, const std::string& what)
      : Error("round " + std::to_string(round) + ": " + what), round_(round) {}
  std::size_t round() const { return round_; }

 private:
  std::size_t round_;
};

// DHT read of a key that was written in the current round.
class VisibilityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ccmpc
