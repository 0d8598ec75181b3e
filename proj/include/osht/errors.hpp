#pragma once

#include <stdexcept>
#include <string>

namespace osht {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A per-order linear system has an exactly singular matrix (zero pivot).
class SingularSystemError : public Error {
 public:
  SingularSystemError(int order, const std::string& what)
      : Error(what), order_(order) {}
  int order() const { return order_; }

 private:
  int order_;
};

/// Inputs whose shapes do not belong together (band-limit or size clash).
class DimensionMismatchError : public Error {
 public:
  explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

/// Malformed input file; the message carries "path:line" where applicable.
class FileFormatError : public Error {
 public:
  explicit FileFormatError(const std::string& what) : Error(what) {}
};

}  // namespace osht
