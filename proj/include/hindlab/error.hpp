#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hindlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sum left the finite structure (IntAdd beyond its limit).
class OutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidElement : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class NotALimit : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hindlab
