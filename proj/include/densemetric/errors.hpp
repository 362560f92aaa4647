#pragma once

#include <stdexcept>
#include <string>

namespace densemetric {

// Base of all library errors. Subtypes mirror the failure categories the
// API contracts name, so callers can catch narrowly.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& msg) : Error(msg) {}
};

// Raised when an operation needs state that was never produced, e.g. a
// backward pass without a forward record.
class StateError : public Error {
 public:
  explicit StateError(const std::string& msg) : Error(msg) {}
};

// An enclosure region that selects no usable points (radius too tight,
// or every kernel weight zero).
class DegenerateEnclosure : public Error {
 public:
  explicit DegenerateEnclosure(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class GenerationFailed : public Error {
 public:
  explicit GenerationFailed(const std::string& msg) : Error(msg) {}
};

// Mining produced no tuples for several consecutive epochs even after
// threshold relaxation.
class TrainingStalled : public Error {
 public:
  explicit TrainingStalled(const std::string& msg) : Error(msg) {}
};

}  // namespace densemetric
