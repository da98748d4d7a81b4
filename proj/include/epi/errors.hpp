#pragma once

#include <stdexcept>
#include <string>

namespace epi {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid configuration, precondition, or usage (CLI exit code 3).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Malformed or unreadable file content (CLI exit code 2).
class FormatError : public Error {
 public:
  enum class Code {
    BadMagic,
    BadVersion,
    BadHeader,
    Truncated,
    TrailingBytes,
    DimensionOverflow,
    BadSidecar,
    BadReport,
    Io,
  };

  FormatError(Code code, const std::string& what) : Error(what), code_(code) {}
  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

/// Numeric failure: NaN/Inf encountered or an undefined ratio (CLI exit code 4).
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what) : Error(what) {}
};

}  // namespace epi
