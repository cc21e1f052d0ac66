#ifndef GENCACHE_ERRORS_HPP
#define GENCACHE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gencache {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tuple lengths do not match the schema dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A token kind is not valid for the operation (e.g. Percent outside the
/// dyadic scheme).
class UnsupportedTokenError : public Error {
 public:
  using Error::Error;
};

/// Cache key violates the key constraints (empty, too long, bad bytes).
class KeyError : public Error {
 public:
  using Error::Error;
};

class KeyTooLongError : public KeyError {
 public:
  using KeyError::KeyError;
};

/// increment() applied to a value that is not an unsigned decimal integer.
class NumericFormatError : public Error {
 public:
  using Error::Error;
};

/// Transport-level failure of a cache backend. Distinct from a miss.
class CacheIoError : public Error {
 public:
  using Error::Error;
};

/// getRevisions exceeded its recursion cap; only possible when the cache
/// evicted a key earlier than the horizon permits.
class HorizonViolationError : public Error {
 public:
  using Error::Error;
};

/// An invalidation increment could not be delivered after retries.
class InvalidationError : public Error {
 public:
  using Error::Error;
};

/// A runtime query does not match any whitelisted template.
class WhitelistViolationError : public Error {
 public:
  using Error::Error;
};

/// Projection would drop a position constrained by the query.
class DroppedConstraintError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Whitelist file syntax error; carries 1-based line/column.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace gencache

#endif  // GENCACHE_ERRORS_HPP
