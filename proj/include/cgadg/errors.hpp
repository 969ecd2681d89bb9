#pragma once

#include <stdexcept>
#include <string>

namespace cgadg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// v * reverse(v) is not a usable nonzero scalar.
class NonInvertibleError : public Error {
 public:
  using Error::Error;
};

// Collinear (or coincident) points where a plane or frame is required.
class DegenerateGeometryError : public Error {
 public:
  using Error::Error;
};

// Distances that no point configuration can satisfy.
class InfeasibleInstanceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace cgadg
