#pragma once

#include <stdexcept>
#include <string>

namespace dynsbox {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violated a documented precondition (range, size, dimensions).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed external data: key text, key files, PGM streams, bank files.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure while reading or writing.
class IoError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

}  // namespace dynsbox
