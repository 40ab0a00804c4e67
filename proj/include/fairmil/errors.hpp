#pragma once

#include <stdexcept>
#include <string>

namespace fairmil {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Tensor/operation dimension mismatch; the message carries the offending shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Invalid runtime value: all-false masks, labels out of range, non-finite
/// losses, degenerate inputs.
class ValueError : public Error {
 public:
  using Error::Error;
};

/// Bad configuration: unparseable config files, invariant violations.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure (open/read/write).
class IoError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid file contents.
class FormatError : public IoError {
 public:
  using IoError::IoError;
};

class BadMagicError : public FormatError {
 public:
  using FormatError::FormatError;
};

class TruncatedFileError : public FormatError {
 public:
  using FormatError::FormatError;
};

/// Manifest metadata disagrees with the referenced payload file.
class ManifestMismatchError : public FormatError {
 public:
  using FormatError::FormatError;
};

}  // namespace fairmil
